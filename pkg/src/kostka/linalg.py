"""Exact dense linear algebra over the rationals.

Vectors are tuples of :class:`fractions.Fraction`; matrices are tuples of
row tuples.  ``Fraction`` keeps every entry reduced with a positive
denominator, so equality of vectors and matrices is structural.  Plain
Gaussian elimination throughout: nothing in this package exceeds a handful
of rows, so fraction-free pivoting tricks are unnecessary.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .errors import MultipleSolutionsError, NoSolutionError, SingularMatrixError

Vec = tuple[Fraction, ...]
Mat = tuple[Vec, ...]


def vector(entries: Iterable) -> Vec:
    return tuple(Fraction(x) for x in entries)


def matrix(rows: Iterable[Iterable]) -> Mat:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("rows of unequal length")
    return out


def identity(n: int) -> Mat:
    one, zero = Fraction(1), Fraction(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_vec(a: Mat, x) -> tuple:
    return tuple(sum(row[j] * x[j] for j in range(len(x))) for row in a)


def mat_mul(a: Mat, b: Mat) -> Mat:
    bt = transpose(b)
    return tuple(tuple(sum(u * v for u, v in zip(row, col)) for col in bt) for row in a)


def _reduced_echelon(rows: list[list[Fraction]]) -> list[int]:
    """In-place Gauss-Jordan elimination; returns the pivot column indices."""
    if not rows:
        return []
    ncols = len(rows[0])
    pivots: list[int] = []
    pr = 0
    for c in range(ncols):
        hit = next((i for i in range(pr, len(rows)) if rows[i][c]), None)
        if hit is None:
            continue
        rows[pr], rows[hit] = rows[hit], rows[pr]
        inv = Fraction(1) / rows[pr][c]
        rows[pr] = [v * inv for v in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[pr])]
        pivots.append(c)
        pr += 1
        if pr == len(rows):
            break
    return pivots


def rank(a: Mat) -> int:
    rows = [[Fraction(v) for v in r] for r in a]
    return len(_reduced_echelon(rows))


def nullspace_dim(a: Mat, cols: int | None = None) -> int:
    if a:
        cols = len(a[0])
    elif cols is None:
        raise ValueError("empty matrix needs an explicit column count")
    return cols - rank(a)


def det(a: Mat) -> Fraction:
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant needs a square matrix")
    rows = [[Fraction(v) for v in r] for r in a]
    out = Fraction(1)
    for c in range(n):
        hit = next((i for i in range(c, n) if rows[i][c]), None)
        if hit is None:
            return Fraction(0)
        if hit != c:
            rows[c], rows[hit] = rows[hit], rows[c]
            out = -out
        out *= rows[c][c]
        inv = Fraction(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[c])]
    return out


def solve_unique(a: Mat, b) -> Vec:
    """Solve A x = b, insisting on a unique solution.

    Raises :class:`NoSolutionError` on inconsistent systems and
    :class:`MultipleSolutionsError` on consistent rank-deficient ones.
    """
    a = matrix(a)
    b = vector(b)
    if len(a) != len(b):
        raise ValueError("matrix/vector size mismatch")
    ncols = len(a[0]) if a else 0
    rows = [[Fraction(v) for v in row] + [b[i]] for i, row in enumerate(a)]
    pivots = _reduced_echelon(rows)
    if pivots and pivots[-1] == ncols:
        raise NoSolutionError("inconsistent linear system")
    if len(pivots) < ncols:
        raise MultipleSolutionsError("rank-deficient linear system")
    return tuple(rows[i][ncols] for i in range(ncols))


def invert(a: Mat) -> Mat:
    a = matrix(a)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("inversion needs a square matrix")
    rows = [[Fraction(v) for v in row] + list(ident_row) for row, ident_row in zip(a, identity(n))]
    pivots = _reduced_echelon(rows)
    if len(pivots) < n or any(p >= n for p in pivots):
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(row[n:]) for row in rows)
