"""Dense linear algebra over a FiniteField.

Matrices are sequences of rows of field codes.  Group elements use tuples of
tuples so they can be hashed; scratch work uses lists.
"""
from __future__ import annotations

from .field import FiniteField

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def to_matrix(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def transpose(a) -> Matrix:
    return tuple(zip(*a))


def mat_mul(F: FiniteField, a, b) -> Matrix:
    bt = list(zip(*b))
    if F.is_prime:
        p = F.p
        return tuple(
            tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt) for row in a
        )
    return tuple(
        tuple(F.sum(F.mul(x, y) for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(F: FiniteField, a, v) -> tuple[int, ...]:
    if F.is_prime:
        return tuple(sum(x * y for x, y in zip(row, v)) % F.p for row in a)
    return tuple(F.sum(F.mul(x, y) for x, y in zip(row, v)) for row in a)


def vec_mat(F: FiniteField, v, a) -> tuple[int, ...]:
    """Row vector times matrix."""
    return mat_vec(F, transpose(a), v)


def mat_sub(F: FiniteField, a, b) -> Matrix:
    return tuple(tuple(F.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(F: FiniteField, a, c: int) -> Matrix:
    return tuple(tuple(F.mul(x, c) for x in row) for row in a)


def rref(F: FiniteField, rows) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        m[r] = [F.mul(x, inv) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(F: FiniteField, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F: FiniteField, rows, ncols: int | None = None) -> list[list[int]]:
    """Basis of {v : rows * v = 0}, one vector per free column."""
    rows = [list(r) for r in rows]
    if ncols is None:
        ncols = len(rows[0])
    reduced, pivots = rref(F, rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(reduced, pivots):
            v[pc] = F.neg(row[f])
        basis.append(v)
    return basis


def det(F: FiniteField, a) -> int:
    m = [list(r) for r in a]
    n = len(m)
    result = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            result = F.neg(result)
        result = F.mul(result, m[c][c])
        inv = F.inv(m[c][c])
        for i in range(c + 1, n):
            if m[i][c]:
                f = F.mul(m[i][c], inv)
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[c])]
    return result


def inverse(F: FiniteField, a) -> Matrix:
    n = len(a)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(a)]
    reduced, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)


def minor_det(F: FiniteField, a, rows, cols) -> int:
    return det(F, [[a[i][j] for j in cols] for i in rows])


def complete_basis(F: FiniteField, vectors, n: int) -> list[tuple[int, ...]]:
    """Extend independent vectors to a basis of F^n with standard vectors."""
    basis = [tuple(v) for v in vectors]
    for i in range(n):
        if len(basis) == n:
            break
        e = tuple(1 if j == i else 0 for j in range(n))
        if rank(F, basis + [e]) > len(basis):
            basis.append(e)
    return basis


def nullspace_mod_p(rows, p: int, ncols: int) -> list[list[int]]:
    """Nullspace over F_p using vectorized row reduction."""
    import numpy as np

    if not len(rows):
        return [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    m = np.array(rows, dtype=np.int64) % p
    nrows = m.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        m[r] = (m[r] * pow(int(m[r, c]), p - 2, p)) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.nonzero(col)[0]
        if hit.size:
            m[hit] = (m[hit] - np.outer(col[hit], m[r])) % p
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = int(-m[i, f]) % p
        basis.append(v)
    return basis
