"""Exact rational matrices: rank, determinant and linear solves.

Two elimination routes are available.  ``bareiss`` is a fraction-free Gaussian
elimination written out here and used as the reference; ``flint`` hands the
(denominator-cleared) integer matrix to FLINT, which is orders of magnitude faster
on the 300x300 matrices that show up at n = 12.  ``auto`` picks by size.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import flint

AUTO_CUTOFF = 24


def _clear_row(row: Sequence) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns (int_row, scale)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row], 1
    return [int(x * den) for x in row], den


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination (rows are consumed)."""
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return 0
    ncols = len(a[0])
    rank, prev = 0, 1
    for c in range(ncols):
        piv = next((r for r in range(rank, m) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        prow = a[rank]
        for r in range(rank + 1, m):
            row = a[r]
            f = row[c]
            if f:
                a[r] = [(p * row[k] - f * prow[k]) // prev for k in range(ncols)]
            elif p != prev:
                a[r] = [(p * row[k]) // prev for k in range(ncols)]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def bareiss_det(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        for r in range(c + 1, n):
            a[r] = [0] * (c + 1) + [(p * a[r][k] - a[r][c] * a[c][k]) // prev for k in range(c + 1, n)]
        prev = p
    return sign * a[n - 1][n - 1]


class RationalMatrix:
    """Dense matrix of exact rationals (ints or Fractions)."""

    def __init__(self, rows: Sequence[Sequence], ncols: int | None = None):
        self.entries = [list(r) for r in rows]
        self.rows = len(self.entries)
        if ncols is None:
            ncols = len(self.entries[0]) if self.entries else 0
        self.cols = ncols
        if any(len(r) != ncols for r in self.entries):
            raise ValueError("ragged rows")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "RationalMatrix":
        return cls([[col[i] for col in columns] for i in range(nrows)], len(columns))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __setitem__(self, ij, value):
        i, j = ij
        self.entries[i][j] = value

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries and self.cols == other.cols

    def __repr__(self):
        return f"RationalMatrix({self.rows}x{self.cols})"

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(c) for c in zip(*self.entries)], self.rows) if self.rows else RationalMatrix([], 0)

    def hstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return RationalMatrix([a + b for a, b in zip(self.entries, other.entries)], self.cols + other.cols)

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return RationalMatrix(self.entries + other.entries, self.cols)

    def is_zero(self) -> bool:
        return all(not x for r in self.entries for x in r)

    def _integer_rows(self) -> tuple[list[list[int]], int]:
        out, scale = [], 1
        for r in self.entries:
            ir, d = _clear_row(r)
            out.append(ir)
            scale *= d
        return out, scale

    def _method(self, method: str) -> str:
        if method == "auto":
            return "bareiss" if max(self.rows, self.cols) <= AUTO_CUTOFF else "flint"
        if method not in ("bareiss", "flint"):
            raise ValueError(f"unknown method {method!r}")
        return method

    def rank(self, method: str = "auto") -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        rows, _ = self._integer_rows()
        rows = [r for r in rows if any(r)]
        if not rows:
            return 0
        if self._method(method) == "bareiss":
            return bareiss_rank(rows)
        return flint.fmpz_mat(rows).rank()

    def det(self, method: str = "auto") -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        rows, scale = self._integer_rows()
        if self._method(method) == "bareiss":
            d = bareiss_det(rows)
        else:
            d = int(flint.fmpz_mat(rows).det()) if rows else 1
        return Fraction(d, scale)

    def solve(self, rhs: Sequence) -> list[Fraction]:
        """Unique solution of ``self @ x = rhs`` for square invertible ``self``."""
        from .errors import SingularError

        n = self.rows
        if n != self.cols:
            raise ValueError("solve needs a square matrix")
        a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(self.entries, rhs)]
        for c in range(n):
            piv = next((r for r in range(c, n) if a[r][c]), None)
            if piv is None:
                raise SingularError("singular system")
            a[c], a[piv] = a[piv], a[c]
            p = a[c][c]
            a[c] = [x / p for x in a[c]]
            for r in range(n):
                if r != c and a[r][c]:
                    f = a[r][c]
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
        return [row[n] for row in a]
