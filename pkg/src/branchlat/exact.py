"""Exact determinants and linear solves over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _bareiss(rows: list[list[int]]) -> int:
    n = len(rows)
    a = [r[:] for r in rows]
    sign, prev = 1, 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // prev
        prev = a[i][i]
    return sign * a[n - 1][n - 1]


def det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a square rational matrix (fraction-free elimination per row scale)."""
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("determinant of a non-square matrix")
    scaled, scale = [], 1
    for row in matrix:
        row = [Fraction(x) for x in row]
        s = lcm(*(x.denominator for x in row))
        scaled.append([int(x * s) for x in row])
        scale *= s
    return Fraction(_bareiss(scaled), scale)


def solve_unique(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]):
    """Solve A x = b for an overdetermined consistent system.

    Returns (x, consistent). x is None when A lacks full column rank.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [[Fraction(x) for x in A[r]] + [Fraction(b[r])] for r in range(rows)]
    pivot_row = 0
    for c in range(cols):
        piv = next((r for r in range(pivot_row, rows) if M[r][c] != 0), None)
        if piv is None:
            return None, True
        M[pivot_row], M[piv] = M[piv], M[pivot_row]
        inv = 1 / M[pivot_row][c]
        M[pivot_row] = [x * inv for x in M[pivot_row]]
        for r in range(rows):
            if r != pivot_row and M[r][c] != 0:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[pivot_row])]
        pivot_row += 1
    consistent = all(M[r][cols] == 0 for r in range(cols, rows))
    return [M[r][cols] for r in range(cols)], consistent
