"""Exact integer and rational arithmetic kernel.

Everything in this module is pure and exact: rationals are
:class:`fractions.Fraction` (always stored reduced, with positive
denominator), integers are Python ints.  Since Python integers are
arbitrary precision, the arithmetic here cannot silently wrap; any
quantity that fits the problem domain (products up to ~10**14 for the
largest Picard indices in range) is represented exactly.  There is no
floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "gcd_list",
    "lcm2",
    "IntMatrix",
    "SmithForm",
    "det3",
    "solve3",
    "smith_normal_form",
]


def gcd_list(values: Iterable[int]) -> int:
    """Nonnegative gcd of a non-empty list; gcd of an all-zero list is 0."""
    values = list(values)
    if not values:
        raise ValueError("gcd_list requires a non-empty list")
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def lcm2(x: int, y: int) -> int:
    """Least common multiple of two positive integers."""
    if x < 1 or y < 1:
        raise ValueError(f"lcm2 requires positive arguments, got ({x}, {y})")
    return x // gcd(x, y) * y


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix with row-major entries."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        nrows = len(rows)
        ncols = len(rows[0]) if nrows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(nrows, ncols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> IntMatrix:
        ncols = len(columns)
        nrows = len(columns[0]) if ncols else 0
        if any(len(c) != nrows for c in columns):
            raise ValueError("ragged columns")
        return cls(
            nrows, ncols, tuple(int(columns[j][i]) for i in range(nrows) for j in range(ncols))
        )

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(idx)
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def transpose(self) -> IntMatrix:
        return IntMatrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def to_lists(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]


@dataclass(frozen=True)
class SmithForm:
    """Invariant factors d1 | d2 | ... of an integer matrix; rank = number of nonzero factors."""

    invariant_factors: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        fac = self.invariant_factors
        for x, y in zip(fac, fac[1:]):
            if x == 0 and y != 0:
                raise ValueError("zero factor followed by nonzero factor")
            if x != 0 and y % x != 0:
                raise ValueError(f"divisibility chain violated: {x} does not divide {y}")
        if self.rank != sum(1 for f in fac if f != 0):
            raise ValueError("rank does not match number of nonzero factors")

    @property
    def torsion_order(self) -> int:
        """Product of the invariant factors that exceed 1."""
        t = 1
        for f in self.invariant_factors:
            if f > 1:
                t *= f
        return t


def det3(m: IntMatrix) -> int:
    """Exact determinant of a 3x3 integer matrix (cofactor expansion)."""
    if m.rows != 3 or m.cols != 3:
        raise ValueError(f"det3 requires a 3x3 matrix, got {m.rows}x{m.cols}")
    e = m.entries
    return (
        e[0] * (e[4] * e[8] - e[5] * e[7])
        - e[1] * (e[3] * e[8] - e[5] * e[6])
        + e[2] * (e[3] * e[7] - e[4] * e[6])
    )


def solve3(m: IntMatrix, rhs: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
    """Solve ``m^T u = rhs`` exactly, i.e. find u with <u, column_j(m)> = rhs[j].

    Uses Cramer's rule on the transpose; raises on singular input.
    """
    if m.rows != 3 or m.cols != 3:
        raise ValueError(f"solve3 requires a 3x3 matrix, got {m.rows}x{m.cols}")
    if len(rhs) != 3:
        raise ValueError("rhs must have length 3")
    det = det3(m)
    if det == 0:
        raise ValueError("singular matrix")
    t = m.transpose()
    sols = []
    for j in range(3):
        cols = [list(t.column(k)) if k != j else list(rhs) for k in range(3)]
        sols.append(Fraction(det3(IntMatrix.from_columns(cols)), det))
    return sols[0], sols[1], sols[2]


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Smith normal form via elementary row/column operations.

    Returns the full diagonal of invariant factors (length min(rows, cols),
    zeros at the end for rank-deficient input), normalized nonnegative.
    """
    a = m.to_lists()
    nr, nc = m.rows, m.cols
    n = min(nr, nc)
    factors: list[int] = []

    for t in range(n):
        while True:
            # smallest nonzero entry of the trailing block becomes the pivot
            pos = None
            best = None
            for i in range(t, nr):
                for j in range(t, nc):
                    v = abs(a[i][j])
                    if v != 0 and (best is None or v < best):
                        best = v
                        pos = (i, j)
            if pos is None:
                factors.extend([0] * (n - t))
                return SmithForm(tuple(factors), len([f for f in factors if f != 0]))
            pi, pj = pos
            if pi != t:
                a[t], a[pi] = a[pi], a[t]
            if pj != t:
                for row in a:
                    row[t], row[pj] = row[pj], row[t]
            p = a[t][t]

            # Euclidean steps down the column and across the row
            dirty = False
            for i in range(t + 1, nr):
                if a[i][t] % p != 0:
                    q = a[i][t] // p
                    for j in range(t, nc):
                        a[i][j] -= q * a[t][j]
                    dirty = True
            for j in range(t + 1, nc):
                if a[t][j] % p != 0:
                    q = a[t][j] // p
                    for i in range(t, nr):
                        a[i][j] -= q * a[i][t]
                    dirty = True
            if dirty:
                continue

            # pivot divides its row and column: clear them
            for i in range(t + 1, nr):
                if a[i][t] != 0:
                    q = a[i][t] // p
                    for j in range(t, nc):
                        a[i][j] -= q * a[t][j]
            for j in range(t + 1, nc):
                if a[t][j] != 0:
                    q = a[t][j] // p
                    for i in range(t, nr):
                        a[i][j] -= q * a[i][t]

            # enforce the divisibility chain: pivot must divide the rest
            culprit = None
            for i in range(t + 1, nr):
                for j in range(t + 1, nc):
                    if a[i][j] % p != 0:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            for j in range(t, nc):
                a[t][j] += a[culprit][j]

        factors.append(abs(a[t][t]))

    return SmithForm(tuple(factors), len([f for f in factors if f != 0]))
