from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class AbelianGroup:
    # Z^free_rank + Z/d1 + ... + Z/dk with 1 < d1 | d2 | ... | dk
    free_rank: int = 0
    torsion: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'torsion', tuple(int(d) for d in self.torsion))
        if self.free_rank < 0:
            raise ValueError(f"Free rank must be nonnegative, got {self.free_rank}")
        if any(d <= 1 for d in self.torsion):
            raise ValueError(f"Torsion coefficients must exceed 1: {list(self.torsion)}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise ValueError(f"Torsion coefficients {list(self.torsion)} do not form a divisor chain")

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append('Z' if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return ' + '.join(parts) if parts else '0'

    def to_dict(self):
        return {'free_rank': self.free_rank, 'torsion': [str(d) for d in self.torsion], 'group': str(self)}
