from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np


def object_array(rows: int, cols: int) -> np.ndarray:
    # Exact integer storage: Python ints in an object array, never machine words
    data = np.empty((rows, cols), dtype=object)
    data.fill(0)
    return data


@dataclass(frozen=True, eq=False)
class IntMatrix:
    # Arbitrary-precision integer matrix; rows are relators and columns generators when built from a presentation
    data: np.ndarray

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> 'IntMatrix':
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("Matrix rows must all have the same length")
        data = object_array(len(rows), cols)
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                data[i, j] = int(v)
        return cls(data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'IntMatrix':
        return cls(object_array(rows, cols))

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        data = object_array(n, n)
        for i in range(n):
            data[i, i] = 1
        return cls(data)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def to_rows(self) -> List[List[int]]:
        return [[int(v) for v in row] for row in self.data]

    def entry(self, i: int, j: int) -> int:
        return int(self.data[i, j])

    def diagonal(self) -> List[int]:
        return [int(self.data[i, i]) for i in range(min(self.rows, self.cols))]

    def is_diagonal(self) -> bool:
        return all(
            self.data[i, j] == 0
            for i in range(self.rows) for j in range(self.cols) if i != j
        )

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        if self.cols == 0 or self.rows == 0 or other.cols == 0:
            return IntMatrix.zeros(self.rows, other.cols)
        return IntMatrix(np.dot(self.data, other.data))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.data.shape == other.data.shape
            and self.to_rows() == other.to_rows()
        )

    def __str__(self) -> str:
        return '\n'.join(' '.join(str(v) for v in row) for row in self.to_rows())

    def to_dict(self):
        return {'rows': self.rows, 'cols': self.cols, 'entries': [[str(v) for v in row] for row in self.to_rows()]}


@dataclass(frozen=True)
class SmithForm:
    # U . A . V = D with U, V unimodular and D a nonnegative divisor-chain diagonal
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    def invariant_factors(self) -> List[int]:
        return [d for d in self.D.diagonal() if d != 0]

    def rank(self) -> int:
        return len(self.invariant_factors())

    def to_dict(self):
        return {
            'U': self.U.to_dict(),
            'D': self.D.to_dict(),
            'V': self.V.to_dict(),
            'invariant_factors': [str(d) for d in self.invariant_factors()]
        }
