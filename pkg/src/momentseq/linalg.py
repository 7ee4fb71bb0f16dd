"""Exact rational linear algebra for small dense matrices."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import Scalar, fmt, to_fraction


class BudgetExceeded(ValueError):
    """A search would need more work than the caller allowed."""

    def __init__(self, required: int, budget: int, what: str = "evaluations"):
        super().__init__(f"needs {required} {what}, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class ExactMatrix:
    """Square matrix of Fractions stored as a tuple of rows."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(to_fraction(v) for v in row) for row in self.rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and non-empty")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[Scalar]]) -> "ExactMatrix":
        return rows if isinstance(rows, ExactMatrix) else cls(tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def is_symmetric(self) -> bool:
        n = self.dim
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> list[list[Fraction]]:
        return [[self.rows[i][j] for j in cols] for i in rows]

    def permuted(self, perm: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(tuple(tuple(self.rows[i][j] for j in perm) for i in perm))

    def to_json(self) -> list[list[str]]:
        return [[fmt(v) for v in row] for row in self.rows]


def det(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Determinant by Gaussian elimination over Q."""
    a = [[to_fraction(v) for v in row] for row in rows]
    n = len(a)
    if n == 0:
        return Fraction(1)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col]
            if f:
                f /= p
                row_r, row_c = a[r], a[col]
                for k in range(col + 1, n):
                    row_r[k] -= f * row_c[k]
    return result


def charpoly(M: ExactMatrix) -> list[Fraction]:
    """Coefficients ``[1, c_1, ..., c_n]`` of ``det(lambda*I - M)``.

    Faddeev-LeVerrier; the divisions by ``k`` are exact over Q.
    """
    M = ExactMatrix.of(M)
    n = M.dim
    A = [list(r) for r in M.rows]
    coeffs = [Fraction(1)]
    B = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        AB = [[sum(A[i][t] * B[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        c = -sum(AB[i][i] for i in range(n)) / k
        coeffs.append(c)
        B = AB
        for i in range(n):
            B[i][i] += c
    return coeffs


def psd_violation(coeffs: Sequence[Fraction]):
    """First ``k`` with ``(-1)^k c_k < 0`` and that value, or None.

    For a symmetric matrix ``(-1)^k c_k`` is the sum of its principal
    ``k x k`` minors, i.e. the k-th elementary symmetric function of the
    eigenvalues; all of them are nonnegative exactly when the matrix is PSD.
    """
    for k, c in enumerate(coeffs):
        e = c if k % 2 == 0 else -c
        if e < 0:
            return k, e
    return None


def is_psd(M) -> tuple[bool, list[Fraction]]:
    """Exact positive-semidefiniteness test for a symmetric matrix."""
    M = ExactMatrix.of(M)
    if not M.is_symmetric():
        raise ValueError("is_psd requires a symmetric matrix")
    coeffs = charpoly(M)
    return psd_violation(coeffs) is None, coeffs


def minor_count(n: int) -> int:
    """Number of minors of all orders of an ``n x n`` matrix."""
    return math.comb(2 * n, n) - 1


DEFAULT_MINOR_BUDGET = 200_000


def min_minor(M, budget: int = DEFAULT_MINOR_BUDGET) -> tuple[Fraction, tuple[int, ...], tuple[int, ...]]:
    """Smallest minor over all orders, with one attaining (rows, cols).

    Ties keep the first minor met in order of size, then row set, then column set.
    """
    M = ExactMatrix.of(M)
    n = M.dim
    need = minor_count(n)
    if need > budget:
        raise BudgetExceeded(need, budget, "minors")
    best = None
    for k in range(1, n + 1):
        for rows in itertools.combinations(range(n), k):
            for cols in itertools.combinations(range(n), k):
                v = det(M.submatrix(rows, cols))
                if best is None or v < best[0]:
                    best = (v, rows, cols)
    return best
