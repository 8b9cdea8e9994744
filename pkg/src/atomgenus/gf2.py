"""Linear algebra over GF(2) on bit-packed square matrices.

Rows are stored as Python integers (bit ``i`` of ``rows[j]`` is the entry in
row ``j``, column ``i``), so a row operation is a single XOR regardless of
width.  Rank is the inner loop of subset searches elsewhere in the package,
hence the mask-based fast path :func:`mask_rank` that avoids building
submatrix objects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class Gf2Matrix:
    """Immutable square matrix over the two-element field.

    The 0x0 matrix is permitted (rank 0, corank 0).
    """

    dim: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.dim < 0:
            raise ValueError("dim must be non-negative")
        if len(self.rows) != self.dim:
            raise ValueError(f"expected {self.dim} rows, got {len(self.rows)}")
        mask = (1 << self.dim) - 1
        for j, r in enumerate(self.rows):
            if r < 0 or r & ~mask:
                raise ValueError(f"row {j} has bits outside column range")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> Gf2Matrix:
        dim = len(rows)
        packed = []
        for row in rows:
            if len(row) != dim:
                raise ValueError("matrix must be square")
            bits = 0
            for i, v in enumerate(row):
                if v & 1:
                    bits |= 1 << i
            packed.append(bits)
        return cls(dim, tuple(packed))

    @classmethod
    def zeros(cls, dim: int) -> Gf2Matrix:
        return cls(dim, (0,) * dim)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.dim and 0 <= j < self.dim):
            raise IndexError(f"entry ({i}, {j}) out of range for dim {self.dim}")
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.dim)] for r in self.rows]

    def is_symmetric(self) -> bool:
        return all(
            self.entry(i, j) == self.entry(j, i)
            for i in range(self.dim)
            for j in range(i + 1, self.dim)
        )


def _rank_of_rows(rows: Iterable[int]) -> int:
    # Greedy elimination: pivots keep pairwise-distinct leading bits, so
    # "row ^ p < row" tests whether p's leading bit is still set in row.
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            if row ^ p < row:
                row ^= p
        if row:
            pivots.append(row)
    return len(pivots)


def rank(m: Gf2Matrix) -> int:
    """GF(2) row rank of ``m``."""
    return _rank_of_rows(m.rows)


def corank(m: Gf2Matrix) -> int:
    """dim minus rank."""
    return m.dim - rank(m)


def principal_submatrix(m: Gf2Matrix, indices: Iterable[int]) -> Gf2Matrix:
    """Restrict rows and columns to ``indices`` (ascending order)."""
    idx = sorted(set(indices))
    for i in idx:
        if not (0 <= i < m.dim):
            raise IndexError(f"index {i} out of range for dim {m.dim}")
    rows = []
    for i in idx:
        bits = 0
        for new_j, j in enumerate(idx):
            if (m.rows[i] >> j) & 1:
                bits |= 1 << new_j
        rows.append(bits)
    return Gf2Matrix(len(idx), tuple(rows))


def mask_rank(rows: Sequence[int], mask: int) -> int:
    """Rank of the principal submatrix selected by bitmask ``mask``.

    Works directly on masked full-width rows; columns outside the mask are
    zeroed, which does not change the rank of the selected rows/columns.
    """
    pivots: list[int] = []
    m = mask
    while m:
        low = m & -m
        i = low.bit_length() - 1
        m ^= low
        row = rows[i] & mask
        for p in pivots:
            if row ^ p < row:
                row ^= p
        if row:
            pivots.append(row)
    return len(pivots)
