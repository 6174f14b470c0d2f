"""Row reduction over a prime field, vectorized with numpy int64.

Entries are residues in [0, p); p stays below 2^31 so products fit int64.
Pivoting is deterministic: first nonzero column, lowest row.
"""

from __future__ import annotations

import numpy as np

from .errors import UsageError
from .field import MAX_CHARACTERISTIC


class Echelon:
    """Incremental row-echelon accumulator over F_p.

    Rows are kept reduced against each other, keyed by pivot column.
    add() reports whether the vector enlarged the span, so rank grows by
    exactly the number of True results.
    """

    def __init__(self, p: int, width: int):
        if not 1 < p < MAX_CHARACTERISTIC:
            raise UsageError(f"characteristic {p} out of range")
        self.p = p
        self.width = width
        self.pivots: dict[int, np.ndarray] = {}

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        v = np.asarray(vec, dtype=np.int64) % self.p
        if v.shape != (self.width,):
            raise UsageError(f"vector of width {v.shape} does not fit {self.width}")
        for col in sorted(self.pivots):
            c = v[col]
            if c:
                v = (v - c * self.pivots[col]) % self.p
        return v

    def add(self, vec: np.ndarray) -> bool:
        v = self.reduce(vec)
        nz = np.flatnonzero(v)
        if nz.size == 0:
            return False
        col = int(nz[0])
        inv = pow(int(v[col]), self.p - 2, self.p)
        row = (v * inv) % self.p
        # keep stored rows fully reduced against the new pivot
        for pc, pr in self.pivots.items():
            c = pr[col]
            if c:
                self.pivots[pc] = (pr - c * row) % self.p
        self.pivots[col] = row
        return True

    def contains(self, vec: np.ndarray) -> bool:
        return not self.reduce(vec).any()

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def rows(self) -> np.ndarray:
        """Reduced rows sorted by pivot column (row-reduced echelon form)."""
        if not self.pivots:
            return np.zeros((0, self.width), dtype=np.int64)
        return np.vstack([self.pivots[c] for c in sorted(self.pivots)])


def rank(matrix: np.ndarray, p: int) -> int:
    ech = Echelon(p, matrix.shape[1]) if matrix.size else None
    if matrix.size == 0:
        return 0
    for row in matrix:
        ech.add(row)
    return ech.rank
