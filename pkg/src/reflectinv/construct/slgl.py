"""Groups between SL_n(F_q) and GL_n(F_q): generators, derivations, Dickson invariants."""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra.field import FiniteField
from ..algebra.linalg import Matrix
from ..algebra.poly import Polynomial
from ..algebra.polymatrix import bareiss_det
from ..forms import MixedForm, derivation


def q_integer(n: int, q: int) -> int:
    """[n]_q = 1 + q + ... + q^(n-1)."""
    return sum(q**i for i in range(n))


def slgl_generators(F: FiniteField, n: int, e: int) -> list[Matrix]:
    """Generators of the group with SL_n <= G <= GL_n and |G : SL_n| = e.

    Elementary transvections I + a E_ij with a running over an F_p-basis of
    F_q, plus diag(zeta, 1, ..., 1) with zeta of order e.
    """
    if (F.q - 1) % e:
        raise ValueError(f"index {e} does not divide q - 1 = {F.q - 1}")
    if n == 1 and e == 1:
        raise ValueError("the trivial group has no reflections")
    gens = []
    basis = [F.pow(F.gen, i) if F.k > 1 else 1 for i in range(F.k)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for a in basis:
                gens.append(tuple(tuple(1 if r == c else (a if (r, c) == (i, j) else 0) for c in range(n)) for r in range(n)))
    if e > 1:
        zeta = F.pow(F.primitive_element(), (F.q - 1) // e)
        gens.append(tuple(tuple((zeta if r == 0 else 1) if r == c else 0 for c in range(n)) for r in range(n)))
    return gens


def moore_determinant(F: FiniteField, n: int, exponents: list[int]) -> Polynomial:
    """det [x_j^(q^e_i)] with rows running through `exponents`."""
    q = F.q
    rows = [[Polynomial.var(F, n, j) ** (q**ei) for j in range(n)] for ei in exponents]
    return bareiss_det(rows)


def dickson_invariants(F: FiniteField, n: int) -> list[Polynomial]:
    """D_{n,0}, ..., D_{n,n-1}; D_{n,i} has degree q^n - q^i."""
    L = moore_determinant(F, n, list(range(n)))
    out = []
    for i in range(n):
        rows = [r for r in range(n + 1) if r != i]
        out.append(moore_determinant(F, n, rows).exact_div(L))
    return out


@dataclass
class SLGLData:
    field: FiniteField
    n: int
    e: int
    generators: list[Matrix]
    thetas: list[MixedForm]
    Q: Polynomial  # det Coef(theta), the product of all normalized linear forms up to scalar
    dickson: list[Polynomial]
    basic_invariants: list[Polynomial]  # f_1 = Q^e, f_i = D_{n,i-1}
    m_star: list[int]
    m: list[int]
    coxeter: int
    sgc_degrees: list[int]


def slgl_data(F: FiniteField, n: int, e: int = 1) -> SLGLData:
    q = F.q
    thetas = [
        derivation(F, n, [Polynomial.var(F, n, j) ** (q ** (n - i)) for j in range(n)])
        for i in range(1, n + 1)
    ]
    rows = [t.coefficient_vector() for t in thetas]
    Q = bareiss_det(rows)
    D = dickson_invariants(F, n)
    basic = [Q**e] + D[1:]
    m_star = [q ** (n - i) for i in range(1, n + 1)]
    h = e * q_integer(n, q)
    return SLGLData(
        field=F,
        n=n,
        e=e,
        generators=slgl_generators(F, n, e),
        thetas=thetas,
        Q=Q,
        dickson=D,
        basic_invariants=basic,
        m_star=m_star,
        m=[h - x for x in m_star],
        coxeter=h,
        sgc_degrees=[f.degree() for f in basic],
    )
