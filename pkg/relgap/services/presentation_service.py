# Presentation Service - Presentation families, deficiency and certified Tietze moves
import logging
from typing import List, Optional, Sequence, Tuple

from relgap.errors import CertificateError, InvalidParameterError, TietzeError
from relgap.models.presentation import (
    ADD_GENERATOR, ADD_RELATOR, REMOVE_GENERATOR, REMOVE_RELATOR,
    DerivationCertificate, DerivationFactor, Presentation, TietzeMove
)
from relgap.models.word import Generator, Word
from relgap.services.word_service import (
    commutator, multiply, parse_word, product_of_conjugates, rename, substitute
)

logger = logging.getLogger(__name__)

TietzeStep = Tuple[Presentation, Optional[TietzeMove]]


def _require_positive(n: int, what: str = 'n'):
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidParameterError(f"{what} must be an integer >= 1, got {n!r}")


def factor_names(i: int) -> Tuple[str, str]:
    # Generator names contributed by the i-th free factor (1-based)
    return f"x{i}", f"t{i}"


class PresentationService:
    # Service class for the Q_n and Gamma presentation families and Tietze moves

    def rho(self, n: int, x: str = 'x', t: str = 't') -> Word:
        # rho_n = (t x t^-1) x (t x t^-1)^-1 x^-(n+1)
        _require_positive(n)
        return Word.from_syllables([(t, 1), (x, 1), (t, -1), (x, 1), (t, 1), (x, -1), (t, -1), (x, -(n + 1))])

    def conjugated_x(self, x: str = 'x', t: str = 't') -> Word:
        # y = t x t^-1
        return Word.from_syllables([(t, 1), (x, 1), (t, -1)])

    def q_presentation(self, n: int) -> Presentation:
        # <x,t | rho_n, x^n>
        _require_positive(n)
        return Presentation(
            generators=('x', 't'),
            relators=(self.rho(n), Word.letter('x', n)),
            name=f"Q_{n}"
        )

    def gamma_presentation(self, ms: Sequence[int]) -> Presentation:
        # Free product of the Q_m, the i-th factor on x_i, t_i
        ms = list(ms)
        if not ms:
            raise InvalidParameterError("gamma_presentation needs at least one factor")
        for m in ms:
            _require_positive(m, 'm')

        generators: List[str] = []
        relators: List[Word] = []
        for i, m in enumerate(ms, start=1):
            x, t = factor_names(i)
            generators.extend([x, t])
            relators.extend([self.rho(m, x, t), Word.letter(x, m)])
        return Presentation(
            generators=tuple(generators),
            relators=tuple(relators),
            name='Gamma_' + ','.join(str(m) for m in ms)
        )

    def deficiency_of(self, p: Presentation) -> int:
        # Relator count minus generator count
        return p.relator_count - p.generator_count

    def check_derivation(self, relators: Sequence[Word], certificate: DerivationCertificate, target: Word) -> bool:
        # True iff the product of the certificate's conjugates freely reduces to target
        factors = []
        for f in certificate.factors:
            if not 0 <= f.relator_index < len(relators) or f.sign not in (1, -1):
                return False
            factors.append((f.conjugator, relators[f.relator_index], f.sign))
        return product_of_conjugates(factors) == target

    def _abbreviate(self, r: Word, block: Word, name: str) -> Tuple[Word, List[Tuple[Word, int]]]:
        # Replace syllable blocks equal to `block` (or its inverse) by name^{+1/-1}. Returns: the rewritten
        # word and, per replacement, the rewritten prefix before it and the sign used
        pattern = block.syllables
        inverse = block.inverse().syllables
        width = len(pattern)
        out = []
        occurrences = []
        syllables = r.syllables
        i = 0
        while i < len(syllables):
            window = syllables[i:i + width]
            sign = 1 if width and window == pattern else -1 if width and window == inverse else 0
            if sign:
                occurrences.append((Word.from_syllables(out), sign))
                out.append((name, sign))
                i += width
            else:
                out.append(syllables[i])
                i += 1
        return Word.from_syllables(out), occurrences

    def _rewrite_certificate(self, occurrences: Sequence[Tuple[Word, int]], block: Word, relator_index: int,
                             definition_index: int, forward: bool = True) -> DerivationCertificate:
        # With s = b.block^-1, each replacement X.block^e.Y -> X.b^e.Y multiplies on the left by
        # X s X^-1 (e = 1) or (X block^-1) s^-1 (X block^-1)^-1 (e = -1). forward derives the
        # abbreviated relator from the original one, otherwise the original from the abbreviated one
        steps = []
        for prefix, sign in occurrences:
            if sign == 1:
                steps.append(DerivationFactor(prefix, definition_index, 1 if forward else -1))
            else:
                steps.append(DerivationFactor(multiply(prefix, block.inverse()), definition_index, -1 if forward else 1))
        if forward:
            steps.reverse()
        return DerivationCertificate(tuple(steps) + (DerivationFactor(Word.identity(), relator_index, 1),))

    def tietze_apply(self, p: Presentation, move: TietzeMove) -> Presentation:
        # Apply one move after checking its certificates. Raises: TietzeError, CertificateError
        if move.kind == ADD_GENERATOR:
            return self._add_generator(p, move)
        if move.kind == REMOVE_GENERATOR:
            return self._remove_generator(p, move)
        if move.kind == ADD_RELATOR:
            if move.word is None or move.certificate is None:
                raise TietzeError("add-relator needs a word and a certificate")
            if not self.check_derivation(p.relators, move.certificate, move.word):
                raise CertificateError(f"Certificate does not derive {move.word} from the relators of {p}")
            return Presentation(p.generators, p.relators + (move.word,), name=p.name)
        return self._remove_relator(p, move)

    def _add_generator(self, p: Presentation, move: TietzeMove) -> Presentation:
        if move.name is None or move.word is None:
            raise TietzeError("add-generator needs a name and a defining word")
        name = Generator(move.name)
        if name in p.generators:
            raise TietzeError(f"Generator {name} already present")
        foreign = move.word.generators() - set(p.generators)
        if foreign:
            raise TietzeError(f"Defining word {move.word} uses unknown generators {sorted(foreign)}")

        definition = multiply(Word.letter(name), move.word.inverse())
        plain = Presentation(p.generators + (name,), p.relators + (definition,), name=p.name)
        if not move.abbreviate:
            return plain

        rewrites = [self._abbreviate(r, move.word, name) for r in p.relators]
        result = Presentation(plain.generators, tuple(w for w, _ in rewrites) + (definition,), name=p.name)
        changed = [i for i, (_, occurrences) in enumerate(rewrites) if occurrences]
        if move.certificates and len(move.certificates) != len(changed):
            raise CertificateError(
                f"Abbreviation rewrites {len(changed)} relators but carries {len(move.certificates)} certificates"
            )
        definition_index = len(p.relators)
        for position, i in enumerate(changed):
            rewritten, occurrences = rewrites[i]
            forward = (move.certificates[position] if move.certificates
                       else self._rewrite_certificate(occurrences, move.word, i, definition_index))
            if not self.check_derivation(plain.relators, forward, rewritten):
                raise CertificateError(f"Certificate does not derive {rewritten} from the relators of {plain}")
            backward = self._rewrite_certificate(occurrences, move.word, i, definition_index, forward=False)
            if not self.check_derivation(result.relators, backward, p.relators[i]):
                raise CertificateError(f"Relator {p.relators[i]} no longer follows from the abbreviated relators")
        logger.info(f"Abbreviated {len(changed)} relators with {name} := {move.word}")
        return result

    def _solve_for(self, r: Word, g: str) -> Optional[Word]:
        # If g occurs once in r with exponent +-1, return the word w with g = w modulo r
        positions = [i for i, (h, _) in enumerate(r.syllables) if h == g]
        if len(positions) != 1 or abs(r.syllables[positions[0]][1]) != 1:
            return None
        i = positions[0]
        before = Word(r.syllables[:i])
        after = Word(r.syllables[i + 1:])
        # r = A g^e B = 1  =>  g^e = A^-1 B^-1
        solution = multiply(before.inverse(), after.inverse())
        return solution if r.syllables[i][1] == 1 else solution.inverse()

    def _remove_generator(self, p: Presentation, move: TietzeMove) -> Presentation:
        g = move.name
        if g not in p.generators:
            raise TietzeError(f"Generator {g} not in presentation")
        for index, r in enumerate(p.relators):
            image = self._solve_for(r, g)
            if image is None:
                continue
            relators = []
            for j, other in enumerate(p.relators):
                if j == index:
                    continue
                rewritten = substitute(other, {g: image})
                if not rewritten.is_identity():
                    relators.append(rewritten)
            generators = tuple(h for h in p.generators if h != g)
            return Presentation(generators, tuple(relators), name=p.name)
        raise TietzeError(f"No relator of the form {g}.w^-1 with w free of {g}")

    def _remove_relator(self, p: Presentation, move: TietzeMove) -> Presentation:
        # Drop a relator after checking it follows from the rest
        if move.word is None or move.certificate is None:
            raise TietzeError("remove-relator needs a word and a certificate")
        if move.word not in p.relators:
            raise TietzeError(f"Relator {move.word} not in presentation")
        remaining = list(p.relators)
        remaining.remove(move.word)
        if not self.check_derivation(remaining, move.certificate, move.word):
            raise CertificateError(f"Certificate does not derive {move.word} from the remaining relators")
        return Presentation(p.generators, tuple(remaining), name=p.name)

    def commutator_form(self, n: int) -> Presentation:
        # <x,t | [txt^-1, x], x^n>, the first line of the HNN chain
        _require_positive(n)
        return Presentation(
            generators=('x', 't'),
            relators=(commutator(self.conjugated_x(), Word.letter('x')), Word.letter('x', n)),
            name=f"Q_{n}"
        )

    def commutator_prelude(self, n: int) -> List[TietzeStep]:
        # From <x,t | rho_n, x^n> to <x,t | x^n, [txt^-1,x]> by two certified relator moves
        start = self.q_presentation(n)
        rho_n, x_n = start.relators
        bracket = commutator(self.conjugated_x(), Word.letter('x'))

        # [y,x] = rho_n . x^n
        add = TietzeMove(ADD_RELATOR, word=bracket, certificate=DerivationCertificate((
            DerivationFactor(Word.identity(), 0, 1),
            DerivationFactor(Word.identity(), 1, 1),
        )))
        middle = self.tietze_apply(start, add)

        # rho_n = [y,x] . x^-n over the remaining relators (x^n, [y,x])
        drop = TietzeMove(REMOVE_RELATOR, word=rho_n, certificate=DerivationCertificate((
            DerivationFactor(Word.identity(), 1, 1),
            DerivationFactor(Word.identity(), 0, -1),
        )))
        end = self.tietze_apply(middle, drop)
        return [(start, None), (middle, add), (end, drop)]

    def _index_of(self, p: Presentation, r: Word) -> int:
        try:
            return p.relators.index(r)
        except ValueError:
            raise CertificateError(f"Relator {r} not found in {p}")

    def derive_bn_certificate(self, n: int, presentation: Optional[Presentation] = None) -> DerivationCertificate:
        """
        Certificate for b^n over the relators s = b.(t.x.t^-1)^-1 and x^n.

        b^n = (prod_{k=n-1..0} b^k s b^-k) . t x^n t^-1, using that the
        partial products telescope to b^{k+1} (txt^-1)^{-(k+1)}.
        """
        _require_positive(n)
        if presentation is None:
            presentation = self.hnn_chain(n)[1][0]
        s = multiply(Word.letter('b'), self.conjugated_x().inverse())
        s_index = self._index_of(presentation, s)
        xn_index = self._index_of(presentation, Word.letter('x', n))
        factors = [DerivationFactor(Word.letter('b', k), s_index, 1) for k in range(n - 1, -1, -1)]
        factors.append(DerivationFactor(Word.letter('t'), xn_index, 1))
        return DerivationCertificate(tuple(factors))

    def derive_abbreviation_certificate(self, presentation: Presentation) -> DerivationCertificate:
        # [b,x] = s . [txt^-1,x] . x s^-1 x^-1 over relators containing s and [txt^-1, x]
        y = self.conjugated_x()
        s = multiply(Word.letter('b'), y.inverse())
        s_index = self._index_of(presentation, s)
        bracket_index = self._index_of(presentation, commutator(y, Word.letter('x')))
        return DerivationCertificate((
            DerivationFactor(Word.identity(), s_index, 1),
            DerivationFactor(Word.identity(), bracket_index, 1),
            DerivationFactor(Word.letter('x'), s_index, -1),
        ))

    def hnn_chain(self, n: int, include_prelude: bool = False) -> List[TietzeStep]:
        # Replay <x,t | [txt^-1,x], x^n> -> add b := txt^-1 (abbreviating) -> add b^n as (presentation, move)
        # pairs, the first move None. Final relators: [b,x], x^n, b.(txt^-1)^-1, b^n (the prelude puts x^n first)
        _require_positive(n)
        steps: List[TietzeStep] = []
        if include_prelude:
            steps.extend(self.commutator_prelude(n))
            start = steps[-1][0]
        else:
            start = self.commutator_form(n)
            steps.append((start, None))

        # [txt^-1, x] becomes [b, x]; the rewrite is certified over the unabbreviated relators
        y = self.conjugated_x()
        plain = self.tietze_apply(start, TietzeMove(ADD_GENERATOR, name='b', word=y))
        add_b = TietzeMove(ADD_GENERATOR, name='b', word=y, abbreviate=True,
                           certificates=(self.derive_abbreviation_certificate(plain),))
        with_b = self.tietze_apply(start, add_b)
        steps.append((with_b, add_b))

        add_bn = TietzeMove(ADD_RELATOR, word=Word.letter('b', n),
                            certificate=self.derive_bn_certificate(n, with_b))
        with_bn = self.tietze_apply(with_b, add_bn)
        steps.append((with_bn, add_bn))

        logger.info(f"Replayed HNN chain for n={n} with {len(steps) - 1} certified moves")
        return steps

    def verify_chain(self, steps: List[TietzeStep]) -> bool:
        # Re-apply every move from its predecessor and compare
        for (before, _), (after, move) in zip(steps, steps[1:]):
            try:
                if self.tietze_apply(before, move) != after:
                    return False
            except (TietzeError, CertificateError) as e:
                logger.warning(f"Chain step failed: {e}")
                return False
        return True

    def parse_presentation(self, text: str) -> Presentation:
        # Line 1: comma-separated generators; further nonempty lines: relators; '#' starts a comment line
        lines = [line.strip() for line in text.splitlines()]
        lines = [line for line in lines if line and not line.startswith('#')]
        if not lines:
            raise TietzeError("Presentation text has no generator line")
        generators = [g.strip() for g in lines[0].split(',') if g.strip()]
        relators = [parse_word(line, generators) for line in lines[1:]]
        return Presentation(tuple(generators), tuple(r for r in relators if not r.is_identity()))

    def format_presentation(self, p: Presentation) -> str:
        lines = [','.join(p.generators)] + [str(r) for r in p.relators]
        return '\n'.join(lines) + '\n'

    def factor_word(self, w: Word, i: int) -> Word:
        # Rename x,t to the generators of the i-th factor
        x, t = factor_names(i)
        return rename(w, {'x': x, 't': t})


_default_service = PresentationService()

# Module-level shortcuts bound to the default service
rho = _default_service.rho
conjugated_x = _default_service.conjugated_x
q_presentation = _default_service.q_presentation
gamma_presentation = _default_service.gamma_presentation
deficiency_of = _default_service.deficiency_of
check_derivation = _default_service.check_derivation
tietze_apply = _default_service.tietze_apply
commutator_form = _default_service.commutator_form
commutator_prelude = _default_service.commutator_prelude
derive_bn_certificate = _default_service.derive_bn_certificate
derive_abbreviation_certificate = _default_service.derive_abbreviation_certificate
hnn_chain = _default_service.hnn_chain
verify_chain = _default_service.verify_chain
parse_presentation = _default_service.parse_presentation
format_presentation = _default_service.format_presentation
