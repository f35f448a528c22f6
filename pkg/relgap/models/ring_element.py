from dataclasses import dataclass, field
from typing import Dict, Hashable

from relgap.models.word import Word


def _clean(terms: Dict) -> Dict:
    return {k: v for k, v in terms.items() if v != 0}


@dataclass(frozen=True, eq=False)
class FreeRingElement:
    # Element of ZF: reduced words to nonzero integer coefficients
    terms: Dict[Word, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'terms', _clean(self.terms))

    @classmethod
    def zero(cls) -> 'FreeRingElement':
        return cls({})

    @classmethod
    def one(cls) -> 'FreeRingElement':
        return cls({Word.identity(): 1})

    @classmethod
    def from_word(cls, w: Word, coefficient: int = 1) -> 'FreeRingElement':
        return cls({w: coefficient})

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other: 'FreeRingElement') -> 'FreeRingElement':
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, 0) + c
        return FreeRingElement(terms)

    def __neg__(self) -> 'FreeRingElement':
        return FreeRingElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: 'FreeRingElement') -> 'FreeRingElement':
        return self + (-other)

    def __mul__(self, other) -> 'FreeRingElement':
        if isinstance(other, int):
            return FreeRingElement({w: c * other for w, c in self.terms.items()})
        if isinstance(other, Word):
            other = FreeRingElement.from_word(other)
        terms: Dict[Word, int] = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                uv = u * v
                terms[uv] = terms.get(uv, 0) + a * b
        return FreeRingElement(terms)

    def __rmul__(self, other) -> 'FreeRingElement':
        # Word * element and int * element
        if isinstance(other, int):
            return self * other
        if isinstance(other, Word):
            return FreeRingElement.from_word(other) * self
        return NotImplemented

    def __eq__(self, other) -> bool:
        return isinstance(other, FreeRingElement) and self.terms == other.terms

    def __str__(self) -> str:
        return _format_terms((str(w), c) for w, c in self.terms.items())

    def to_dict(self):
        return {str(w): str(c) for w, c in sorted(self.terms.items(), key=lambda kv: str(kv[0]))}


@dataclass(frozen=True, eq=False)
class GroupRingElement:
    # Element of ZG keyed by canonical forms; arithmetic lives in the GroupRing that built it
    terms: Dict[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, 'terms', _clean(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def augmentation(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms.get(k, 0) + c
        return GroupRingElement(terms)

    def __neg__(self) -> 'GroupRingElement':
        return GroupRingElement({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: 'GroupRingElement') -> 'GroupRingElement':
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __str__(self) -> str:
        return _format_terms((str(k.to_word()), c) for k, c in self.terms.items())

    def to_dict(self):
        return {str(k.to_word()): str(c) for k, c in self.terms.items()}


def _format_terms(pairs) -> str:
    parts = []
    for label, c in sorted(pairs):
        body = label if abs(c) == 1 and label != '1' else (f"{abs(c)}" if label == '1' else f"{abs(c)}*{label}")
        parts.append(('-' if c < 0 else '+') + ' ' + body)
    if not parts:
        return '0'
    text = ' '.join(parts)
    return text[2:] if text.startswith('+ ') else '-' + text[2:]
