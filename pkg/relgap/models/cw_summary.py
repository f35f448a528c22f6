from dataclasses import dataclass
from typing import Tuple


@dataclass(frozen=True)
class CwSummary:
    # Cell counts of a CW complex by dimension; attaching maps are not recorded
    cells: Tuple[int, ...]
    label: str = ''

    def __post_init__(self):
        cells = [int(c) for c in self.cells]
        if any(c < 0 for c in cells):
            raise ValueError(f"Cell counts must be nonnegative: {cells}")
        while cells and cells[-1] == 0:
            cells.pop()
        object.__setattr__(self, 'cells', tuple(cells))

    @property
    def dimension(self) -> int:
        return len(self.cells) - 1

    @property
    def total(self) -> int:
        return sum(self.cells)

    def to_dict(self):
        return {'label': self.label, 'cells': list(self.cells), 'total_cells': self.total, 'dimension': self.dimension}
