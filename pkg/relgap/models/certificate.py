from dataclasses import dataclass
from typing import Tuple

from relgap.models.word import Word


@dataclass(frozen=True)
class Certificate:
    # Product of conjugates u . relator^sign . u^-1 of a single relator
    factors: Tuple[Tuple[Word, int], ...] = ()

    def __len__(self) -> int:
        return len(self.factors)

    def letter_size(self) -> int:
        return sum(2 * u.letter_length() for u, _ in self.factors)

    def to_dict(self):
        return {
            'factor_count': len(self.factors),
            'factors': [{'conjugator': str(u), 'sign': sign} for u, sign in self.factors]
        }
