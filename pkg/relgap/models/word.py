import re
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Tuple

from relgap.errors import WordSyntaxError

GENERATOR_PATTERN = re.compile(r'^[a-z][a-z0-9]*$')


class Generator(str):
    # A generator name such as "x", "t", "x1" or "t2"

    def __new__(cls, name: str):
        if not isinstance(name, str) or not GENERATOR_PATTERN.match(name):
            raise WordSyntaxError(f"Invalid generator name: {name!r}")
        return super().__new__(cls, name)


Syllable = Tuple[Generator, int]


def reduce_syllables(syllables: Iterable[Tuple[str, int]]) -> Tuple[Syllable, ...]:
    # Free reduction with syllable merging, single left-to-right pass over a stack
    stack: List[List] = []
    for gen, exp in syllables:
        if exp == 0:
            continue
        if stack and stack[-1][0] == gen:
            merged = stack[-1][1] + exp
            if merged == 0:
                stack.pop()
            else:
                stack[-1][1] = merged
        else:
            stack.append([gen, exp])
    return tuple((Generator(g) if type(g) is not Generator else g, e) for g, e in stack)


@dataclass(frozen=True)
class Word:
    # Reduced free-group word as merged syllables; build through from_syllables so it stays reduced
    syllables: Tuple[Syllable, ...] = ()

    @classmethod
    def from_syllables(cls, syllables: Iterable[Tuple[str, int]]) -> 'Word':
        return cls(reduce_syllables(syllables))

    @classmethod
    def identity(cls) -> 'Word':
        return cls(())

    @classmethod
    def letter(cls, name: str, exponent: int = 1) -> 'Word':
        return cls.from_syllables([(Generator(name), exponent)])

    def is_identity(self) -> bool:
        return not self.syllables

    def generators(self) -> set:
        return {g for g, _ in self.syllables}

    def letter_length(self) -> int:
        # Letter count with multiplicity
        return sum(abs(e) for _, e in self.syllables)

    def inverse(self) -> 'Word':
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def letters(self) -> Iterator[Syllable]:
        # Expand into single letters; only for words of moderate length
        for g, e in self.syllables:
            step = 1 if e > 0 else -1
            for _ in range(abs(e)):
                yield g, step

    def __mul__(self, other: 'Word') -> 'Word':
        if not isinstance(other, Word):
            return NotImplemented
        return Word.from_syllables(self.syllables + other.syllables)

    def __len__(self) -> int:
        return self.letter_length()

    def __str__(self) -> str:
        if not self.syllables:
            return '1'
        return '.'.join(g if e == 1 else f"{g}^{e}" for g, e in self.syllables)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def to_dict(self):
        return {
            'word': str(self),
            'syllables': [[g, str(e)] for g, e in self.syllables],
            'letter_length': str(self.letter_length())
        }
