from dataclasses import dataclass
from typing import Tuple


def _normalize(k: int, p: int, e: int) -> Tuple[int, int]:
    # p / k^e with e = 0 or k not dividing p
    if p == 0:
        return 0, 0
    while e > 0 and p % k == 0:
        p //= k
        e -= 1
    return p, e


@dataclass(frozen=True)
class AffineMap:
    # z -> k^scale_exp * z + p / k^e on Z[1/k]; x translates by 1 and y scales by k, so y x y^-1 = x^k
    k: int
    scale_exp: int = 0
    p: int = 0
    e: int = 0

    def __post_init__(self):
        if self.k < 2:
            raise ValueError(f"Multiplier must be >= 2, got {self.k}")
        p, e = _normalize(self.k, self.p, self.e)
        object.__setattr__(self, 'p', p)
        object.__setattr__(self, 'e', e)

    @classmethod
    def translation(cls, k: int, m: int) -> 'AffineMap':
        return cls(k, 0, m, 0)

    @classmethod
    def scaling(cls, k: int, m: int) -> 'AffineMap':
        return cls(k, m, 0, 0)

    def is_identity(self) -> bool:
        return self.scale_exp == 0 and self.p == 0

    def is_canonical(self) -> bool:
        return (self.p != 0 or self.e == 0) and (self.e == 0 or self.p % self.k != 0)

    def compose(self, other: 'AffineMap') -> 'AffineMap':
        # (self o other)(z) = k^(a1+a2) z + k^a1 * p2/k^e2 + p1/k^e1
        if other.k != self.k:
            raise ValueError("Cannot compose maps with different multipliers")
        k = self.k
        p2, e2 = other.p, other.e
        if self.scale_exp >= 0:
            p2 *= k ** self.scale_exp
        else:
            e2 -= self.scale_exp
        e = max(self.e, e2)
        p = self.p * k ** (e - self.e) + p2 * k ** (e - e2)
        return AffineMap(k, self.scale_exp + other.scale_exp, p, e)

    def __matmul__(self, other: 'AffineMap') -> 'AffineMap':
        return self.compose(other)

    def __str__(self) -> str:
        scale = '' if self.scale_exp == 0 else f"{self.k}^{self.scale_exp}*"
        offset = str(self.p) if self.e == 0 else f"{self.p}/{self.k}^{self.e}"
        return f"z -> {scale}z + {offset}"

    def to_dict(self):
        return {'k': self.k, 'scale_exp': str(self.scale_exp), 'p': str(self.p), 'e': str(self.e)}
