"""Determinants of square matrices with Polynomial entries."""
from __future__ import annotations

from .poly import Polynomial


def _cost(f: Polynomial) -> tuple[int, int]:
    return (len(f), f.degree())


def bareiss_det(rows: list[list[Polynomial]]) -> Polynomial:
    """Fraction-free determinant with exact division.

    Pivots are chosen over the whole trailing block, preferring the entry
    with the fewest terms; rows and columns are swapped and the sign tracked.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        raise ValueError("determinant of an empty matrix needs a ring")
    F, nv = m[0][0].field, m[0][0].n
    sign = 1
    prev = Polynomial.one(F, nv)
    for k in range(n):
        best, where = None, None
        for i in range(k, n):
            for j in range(k, n):
                e = m[i][j]
                if e:
                    c = _cost(e)
                    if best is None or c < best:
                        best, where = c, (i, j)
                        if c == (1, 0):
                            break
            if best == (1, 0):
                break
        if where is None:
            return Polynomial.zero(F, nv)
        i, j = where
        if i != k:
            m[k], m[i] = m[i], m[k]
            sign = -sign
        if j != k:
            for row in m:
                row[k], row[j] = row[j], row[k]
            sign = -sign
        pivot = m[k][k]
        prev_const = prev.is_constant()
        inv_prev = F.inv(prev.constant_term()) if prev_const else None
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                val = pivot * row_i[j]
                if mik and row_k[j]:
                    val = val - mik * row_k[j]
                if prev_const:
                    row_i[j] = val.scale(inv_prev)
                else:
                    row_i[j] = val.exact_div(prev)
            row_i[k] = Polynomial.zero(F, nv)
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_det(rows: list[list[Polynomial]]) -> Polynomial:
    """Laplace expansion along the first row; an independent check for small n."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    F, nv = rows[0][0].field, rows[0][0].n
    total = Polynomial.zero(F, nv)
    for j in range(n):
        a = rows[0][j]
        if not a:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = a * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def minor(rows, i: int, j: int):
    return [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]


def cofactor_matrix(rows: list[list[Polynomial]]) -> list[list[Polynomial]]:
    """C[i][j] = (-1)^(i+j) det of the minor without row i and column j."""
    n = len(rows)
    F, nv = rows[0][0].field, rows[0][0].n
    if n == 1:
        return [[Polynomial.one(F, nv)]]
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            d = bareiss_det(minor(rows, i, j))
            row.append(d if (i + j) % 2 == 0 else -d)
        out.append(row)
    return out
