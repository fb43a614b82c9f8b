"""Exact rational linear algebra: square matrices and linear-system solving.

Everything here works over `fractions.Fraction`; there are no tolerances
anywhere, and singularity/inconsistency detection is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import SingularLinearMap


def as_fraction(value) -> Fraction:
    """Promote an exact rational literal (int, Fraction, or 'p/q' string).

    Floats are rejected: they would silently break the exactness contract.
    """
    if isinstance(value, float):
        raise TypeError(f"exact rational required, got float {value!r}")
    return Fraction(value)


@dataclass(frozen=True)
class LinearMap:
    """An n-by-n matrix of exact rationals, acting on column vectors."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(as_fraction(x) for x in row) for row in self.rows)
        if not rows or any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square and nonempty")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, n: int) -> "LinearMap":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    def entry(self, i: int, j: int) -> Fraction:
        """Entry in row i, column j (1-based)."""
        return self.rows[i - 1][j - 1]

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.n != other.n:
            raise ValueError("matrix sizes differ")
        n = self.n
        return LinearMap(
            tuple(
                tuple(sum(self.rows[i][k] * other.rows[k][j] for k in range(n)) for j in range(n))
                for i in range(n)
            )
        )

    def determinant(self) -> Fraction:
        a = [list(row) for row in self.rows]
        n = self.n
        det = Fraction(1)
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != col:
                a[col], a[pivot] = a[pivot], a[col]
                det = -det
            det *= a[col][col]
            inv = 1 / a[col][col]
            for r in range(col + 1, n):
                if a[r][col] != 0:
                    factor = a[r][col] * inv
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return det

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def inverse(self) -> "LinearMap":
        n = self.n
        a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self.rows)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
            if pivot is None:
                raise SingularLinearMap("matrix is singular")
            a[col], a[pivot] = a[pivot], a[col]
            inv = 1 / a[col][col]
            a[col] = [x * inv for x in a[col]]
            for r in range(n):
                if r != col and a[r][col] != 0:
                    factor = a[r][col]
                    a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
        return LinearMap(tuple(tuple(row[n:]) for row in a))

    def to_string_rows(self) -> list:
        """Rows as 'p/q' strings, the wire format used by the CLI."""
        return [[str(x) for x in row] for row in self.rows]

    @classmethod
    def from_string_rows(cls, rows: Iterable[Iterable]) -> "LinearMap":
        return cls(tuple(tuple(as_fraction(x) for x in row) for row in rows))


def solve_exact(
    rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction], n_cols: int
) -> Optional[tuple]:
    """Solve A x = b exactly over the rationals (A has n_cols columns).

    Returns (solution, free_count) with every free variable set to zero, or
    None when the system is inconsistent.  Reduction is plain exact
    Gauss-Jordan; with Fraction arithmetic there is no pivot-size concern.
    """
    n_rows = len(rows)
    aug = [list(row) + [rhs[k]] for k, row in enumerate(rows)]
    pivot_cols = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((k for k in range(r, n_rows) if aug[k][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for k in range(n_rows):
            if k != r and aug[k][c] != 0:
                factor = aug[k][c]
                aug[k] = [a - factor * b for a, b in zip(aug[k], aug[r])]
        pivot_cols.append(c)
        r += 1
    for k in range(r, n_rows):
        if aug[k][n_cols] != 0:
            return None
    solution = [Fraction(0)] * n_cols
    for row_idx, col in enumerate(pivot_cols):
        solution[col] = aug[row_idx][n_cols]
    return solution, n_cols - len(pivot_cols)
