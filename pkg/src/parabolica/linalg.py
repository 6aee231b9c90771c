"""Exact linear algebra over the rationals for small dense systems.

Everything here works on sequences of ints or Fractions and returns
Fractions; no floating point is ever involved.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Row = Sequence[int | Fraction]


def _as_fraction_rows(rows: Sequence[Row]) -> list[list[Fraction]]:
    out = [[Fraction(x) for x in row] for row in rows]
    n = len(out)
    if any(len(row) != n for row in out):
        raise ValueError("square matrix required")
    return out


def det(rows: Sequence[Row]) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination.

    The empty matrix has determinant 1, so Cramer formulas degenerate
    gracefully for an empty index set.
    """
    a = _as_fraction_rows(rows)
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            result = -result
        result *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return result


def solve(rows: Sequence[Row], rhs: Sequence[int | Fraction]) -> tuple[Fraction, ...]:
    """Solve A x = b exactly by Gauss-Jordan elimination.

    Raises ValueError on a singular matrix; finite-type Cartan matrices
    are always invertible.
    """
    a = _as_fraction_rows(rows)
    b = [Fraction(x) for x in rhs]
    n = len(a)
    if len(b) != n:
        raise ValueError("dimension mismatch")
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            b[col], b[pivot] = b[pivot], b[col]
        inv = Fraction(1) / a[col][col]
        a[col] = [x * inv for x in a[col]]
        b[col] *= inv
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
                b[r] -= factor * b[col]
    return tuple(b)


def transpose(rows: Sequence[Row]) -> tuple[tuple[Fraction, ...], ...]:
    a = _as_fraction_rows(rows)
    return tuple(zip(*a)) if a else ()
