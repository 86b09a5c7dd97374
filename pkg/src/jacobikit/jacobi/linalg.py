"""Gauss-Jordan elimination over the scalar fraction field."""

from __future__ import annotations

from ..errors import Degenerate


def inverse(matrix: list, chart) -> list:
    """Inverse of a square matrix of :class:`ScalarField` entries.

    Pivots are chosen as the first nonzero entry in the column; exact zero
    testing makes that sufficient.  Raises :class:`Degenerate` when singular.
    """
    n = len(matrix)
    zero, one = chart.zero, chart.one
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if pivot is None:
            raise Degenerate("matrix is singular (zero determinant)")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv if v else v for v in a[col]]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if factor.is_zero():
                continue
            a[r] = [v - factor * w if w else v for v, w in zip(a[r], a[col])]
    return [row[n:] for row in a]


def matmul(A: list, B: list, chart) -> list:
    n, m, p = len(A), len(B), len(B[0])
    zero = chart.zero
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for k in range(m):
                if A[i][k] and B[k][j]:
                    acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def matvec(A: list, v: list, chart) -> list:
    zero = chart.zero
    out = []
    for row in A:
        acc = zero
        for a, x in zip(row, v):
            if a and x:
                acc = acc + a * x
        out.append(acc)
    return out
