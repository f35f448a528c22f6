# Word Service - Free-group word algebra over a named alphabet
import logging
import re
from itertools import chain, repeat
from typing import Dict, Iterable, Optional, Tuple

from relgap.errors import UnknownGeneratorError, WordSyntaxError
from relgap.models.word import Generator, Word, reduce_syllables

logger = logging.getLogger(__name__)

SYLLABLE_PATTERN = re.compile(r'^([a-z][a-z0-9]*)(?:\^(-?[0-9]+))?$')


class WordService:
    # Service class for parsing and multiplying words in a free group

    def parse_word(self, text: str, alphabet: Optional[Iterable[str]] = None) -> Word:
        # Parse "t.x.t^-1.x^-3" style text. Args: text: word in the dot grammar, alphabet: allowed generator names (None accepts any). Returns: reduced Word
        if text is None or text == '':
            raise WordSyntaxError("Empty input is not a word (use '1' for the identity)")
        if text == '1':
            return Word.identity()

        allowed = set(alphabet) if alphabet is not None else None
        syllables = []
        for part in text.split('.'):
            match = SYLLABLE_PATTERN.match(part)
            if not match:
                raise WordSyntaxError(f"Malformed syllable {part!r} in {text!r}")
            name, exponent = match.group(1), match.group(2)
            if allowed is not None and name not in allowed:
                raise UnknownGeneratorError(f"Unknown generator {name!r}; expected one of {sorted(allowed)}")
            syllables.append((Generator(name), int(exponent) if exponent is not None else 1))
        return Word.from_syllables(syllables)

    def reduce(self, syllables: Iterable[Tuple[str, int]]) -> Word:
        # Freely reduce a syllable stream. Returns: reduced Word
        return Word(reduce_syllables(syllables))

    def multiply(self, *words: Word) -> Word:
        # Concatenate and reduce. Args: words: factors in order
        return Word(reduce_syllables(chain.from_iterable(w.syllables for w in words)))

    def invert(self, w: Word) -> Word:
        # Inverse word
        return w.inverse()

    def power(self, w: Word, k: int) -> Word:
        # w^k with exponents kept as single syllables where w is a conjugate of a power
        if k == 0 or w.is_identity():
            return Word.identity()
        if k < 0:
            w, k = w.inverse(), -k
        if len(w.syllables) == 1:
            g, e = w.syllables[0]
            return Word(((g, e * k),))

        # Peel the conjugating prefix so only the cyclic core is repeated
        syllables = list(w.syllables)
        prefix = []
        while len(syllables) >= 2 and syllables[0][0] == syllables[-1][0] \
                and syllables[0][1] == -syllables[-1][1]:
            prefix.append(syllables.pop(0))
            syllables.pop()
        core = tuple(syllables)
        conj = Word(tuple(prefix))
        if len(core) == 1:
            g, e = core[0]
            return self.multiply(conj, Word(((g, e * k),)), conj.inverse())
        body = reduce_syllables(chain.from_iterable(repeat(core, k)))
        return self.multiply(conj, Word(body), conj.inverse())

    def commutator(self, a: Word, b: Word) -> Word:
        # [a, b] = a.b.a^-1.b^-1
        return self.multiply(a, b, a.inverse(), b.inverse())

    def conjugate(self, u: Word, w: Word) -> Word:
        # u.w.u^-1
        return self.multiply(u, w, u.inverse())

    def exponent_sum(self, w: Word, g: str) -> int:
        # Total exponent of generator g in w
        return sum(e for h, e in w.syllables if h == g)

    def substitute(self, w: Word, images: Dict[str, Word]) -> Word:
        # Apply the free-group homomorphism sending each listed generator to its image
        parts = []
        for g, e in w.syllables:
            if g in images:
                parts.append(self.power(images[g], e).syllables)
            else:
                parts.append(((g, e),))
        return Word(reduce_syllables(chain.from_iterable(parts)))

    def rename(self, w: Word, names: Dict[str, str]) -> Word:
        return Word(tuple((Generator(names.get(g, g)), e) for g, e in w.syllables))

    def product_of_conjugates(self, factors: Iterable[Tuple[Word, Word, int]]) -> Word:
        # Reduce u1.r1^s1.u1^-1 ... in one pass. Args: factors: (conjugator, relator, sign) triples
        def stream():
            for u, r, sign in factors:
                yield from u.syllables
                yield from (r.syllables if sign > 0 else r.inverse().syllables)
                yield from u.inverse().syllables
        return Word(reduce_syllables(stream()))


_default_service = WordService()

# Module-level shortcuts bound to the default service
parse_word = _default_service.parse_word
reduce = _default_service.reduce
multiply = _default_service.multiply
invert = _default_service.invert
power = _default_service.power
commutator = _default_service.commutator
conjugate = _default_service.conjugate
exponent_sum = _default_service.exponent_sum
substitute = _default_service.substitute
rename = _default_service.rename
product_of_conjugates = _default_service.product_of_conjugates
