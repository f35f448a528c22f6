from dataclasses import dataclass
from typing import Optional, Tuple

from relgap.models.word import Word


@dataclass(frozen=True)
class BaseElement:
    # (a, b) in Z/n x Z/n; x is (1, 0) and t x t^-1 is (0, 1)
    a: int = 0
    b: int = 0

    def is_identity(self) -> bool:
        return self.a == 0 and self.b == 0

    def to_word(self, x: str = 'x', t: str = 't') -> Word:
        # x^a (t x t^-1)^b = x^a t x^b t^-1
        return Word.from_syllables([(x, self.a), (t, 1 if self.b else 0), (x, self.b), (t, -1 if self.b else 0)])

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class HnnForm:
    # h0 t^e1 g1 ... t^ek gk in Q_n; g after t^+1 lies in {(0, j)}, after t^-1 in {(i, 0)}
    n: int
    head: BaseElement = BaseElement()
    tail: Tuple[Tuple[int, BaseElement], ...] = ()

    def is_identity(self) -> bool:
        return self.head.is_identity() and not self.tail

    def to_word(self, x: str = 'x', t: str = 't') -> Word:
        parts = list(self.head.to_word(x, t).syllables)
        for eps, g in self.tail:
            parts.append((t, eps))
            parts.extend(g.to_word(x, t).syllables)
        return Word.from_syllables(parts)

    def __str__(self) -> str:
        body = str(self.head)
        for eps, g in self.tail:
            body += f" t^{eps} {g}"
        return body

    def to_dict(self):
        return {
            'n': self.n,
            'head': [self.head.a, self.head.b],
            'tail': [[eps, [g.a, g.b]] for eps, g in self.tail],
            'word': str(self.to_word())
        }


@dataclass(frozen=True)
class ProductForm:
    # Alternating free-product normal form: (factor index, nontrivial HnnForm) syllables
    ms: Tuple[int, ...]
    syllables: Tuple[Tuple[int, HnnForm], ...] = ()

    def is_identity(self) -> bool:
        return not self.syllables

    def to_word(self) -> Word:
        parts = []
        for i, form in self.syllables:
            parts.extend(form.to_word(f"x{i}", f"t{i}").syllables)
        return Word.from_syllables(parts)

    def __str__(self) -> str:
        if not self.syllables:
            return '1'
        return ' * '.join(f"[{i}: {form}]" for i, form in self.syllables)

    def to_dict(self):
        return {
            'ms': list(self.ms),
            'syllables': [{'factor': i, 'form': form.to_dict()} for i, form in self.syllables],
            'word': str(self.to_word()),
            'trivial': self.is_identity()
        }


@dataclass(frozen=True)
class OrderResult:
    # kind is 'finite', 'infinite' or 'unknown'
    kind: str
    order: Optional[int] = None
    bound: Optional[int] = None
    reason: str = ''

    def to_dict(self):
        return {'kind': self.kind, 'order': self.order, 'bound': self.bound, 'reason': self.reason}
