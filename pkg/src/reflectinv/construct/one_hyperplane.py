"""Bases for groups whose non-identity elements all fix one hyperplane H.

Everything is built in convenient coordinates: ell_H = x_n, v_1..v_b are
transvection root vectors, v_n is an eigenvector of a diagonalizable
reflection of maximal order, and v_1..v_{n-1} span H.  Results are mapped
back with `to_original`.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import linalg
from ..algebra.linalg import Matrix
from ..algebra.poly import Polynomial
from ..forms import (
    MixedForm,
    colex_subsets,
    derivation,
    euler_derivation,
    euler_differential,
    mixed_mul,
    one_form,
    wedge_all,
)
from ..group import GroupData, act, reflection_data


class ConstructionError(ValueError):
    """The group does not satisfy the hypotheses of a construction."""


@dataclass
class ConvenientBasis:
    P: Matrix  # columns are v_1..v_n in the original coordinates
    P_inverse: Matrix  # rows are x_1..x_n in the original coordinates
    b: int
    e: int
    delta: int
    eigenvalue: int  # of s_H on v_n (1 when e == 1)


def to_original(form, basis: ConvenientBasis):
    """Rewrite a form given in convenient coordinates in the original ones."""
    return act(basis.P, form)


def to_convenient(form, basis: ConvenientBasis):
    return act(basis.P_inverse, form)


def convenient_basis(G: GroupData) -> ConvenientBasis:
    if not G.fixes_single_hyperplane():
        raise ConstructionError("group does not fix a single hyperplane pointwise")
    F, n = G.field, G.n
    h = G.hyperplanes[0]
    ell = h.ell

    def ev(v):
        return F.sum(F.mul(a, c) for a, c in zip(ell, v))

    if h.e > 1:
        _, root, lam = reflection_data(F, h.s_H)
        scale = F.inv(ev(root))
        v_n = tuple(F.mul(c, scale) for c in root)
    else:
        lam = 1
        i = next(i for i, c in enumerate(ell) if c)
        v_n = tuple(F.inv(ell[i]) if j == i else 0 for j in range(n))

    cols: list[tuple[int, ...]] = []
    for r in G.reflections:
        if r.kind != "transvection":
            continue
        w = tuple(F.sub(a, c) for a, c in zip(linalg.mat_vec(F, r.matrix, v_n), v_n))
        if linalg.rank(F, cols + [w]) > len(cols):
            cols.append(w)
    if len(cols) != h.b:
        raise ConstructionError("transvection roots do not match b_H")
    for i in range(n):
        if len(cols) == n - 1:
            break
        e_i = tuple(1 if j == i else 0 for j in range(n))
        w = tuple(F.sub(a, F.mul(ell[i], c)) for a, c in zip(e_i, v_n))
        if linalg.rank(F, cols + [w]) > len(cols):
            cols.append(w)
    cols.append(v_n)
    P = linalg.transpose(cols)
    return ConvenientBasis(
        P=P,
        P_inverse=linalg.inverse(F, P),
        b=h.b,
        e=h.e,
        delta=h.delta,
        eigenvalue=lam,
    )


@dataclass
class OneHyperplaneBases:
    basis: ConvenientBasis
    thetas: list[MixedForm]
    omegas: list[MixedForm]
    mixed: dict[int, list[tuple[str, MixedForm]]] = field(default_factory=dict)
    eta0: MixedForm | None = None


def _set_label(I) -> str:
    return "{" + ",".join(str(i + 1) for i in I) + "}"


def one_hyperplane_bases(G: GroupData, ranks=None) -> OneHyperplaneBases:
    """Derivation, 1-form and rank-k mixed bases for a one-hyperplane group.

    Rank k uses B_k, or B'_k when G = {1, t} with t a transvection; in the
    latter case eta0 replaces the elements w~_{I u {1}} theta_n.
    """
    cb = convenient_basis(G)
    F, n = G.field, G.n
    b, e, delta = cb.b, cb.e, cb.delta
    x = [Polynomial.var(F, n, i) for i in range(n)]
    one = Polynomial.one(F, n)
    zero = Polynomial.zero(F, n)
    xn = x[n - 1]

    thetas = [derivation(F, n, [one if j == i else zero for j in range(n)]) for i in range(n - 1)]
    thetas.append(euler_derivation(F, n))

    omegas = []
    for i in range(n - 1):
        if i < b:
            coeffs = [zero] * n
            coeffs[i] = xn**e
            coeffs[n - 1] = -(x[i] * xn ** (e - 1))
        else:
            coeffs = [one if j == i else zero for j in range(n)]
        omegas.append(one_form(F, n, coeffs))
    omegas.append(one_form(F, n, [zero] * (n - 1) + [xn ** (e - 1)]))

    special = set(range(b)) | {n - 1}

    def tilde(I):
        m = max(0, len(special.intersection(I)) - 1)
        w = wedge_all([omegas[i] for i in I], F, n)
        return w.exact_div(xn ** (e * m)) if m else w

    dE = euler_differential(F, n)
    eta0 = None
    if delta == 1:
        c = {
            ((0,), 0): x[0],
            ((0,), n - 1): xn,
            ((n - 1,), 0): x[0],
            ((n - 1,), n - 1): x[0],
        }
        eta0 = MixedForm(F, n, 1, "diff_derivation", c)

    ranks = range(n + 1) if ranks is None else ranks
    mixed: dict[int, list[tuple[str, MixedForm]]] = {}
    for k in ranks:
        out: list[tuple[str, MixedForm]] = []
        for I in colex_subsets(n, k):
            w = tilde(I)
            for j in range(n):
                if delta == 1:
                    keep = j != n - 1 or (0 not in I and n - 1 not in I)
                else:
                    keep = n - 1 not in I or j != n - 1
                if keep:
                    out.append((f"w~{_set_label(I)}*theta{j + 1}", mixed_mul(w, thetas[j])))
        if k >= 1:
            for I in colex_subsets(n, k - 1):
                if n - 1 in I:
                    continue
                w = tilde(I)
                out.append((f"w~{_set_label(I)}*dthetaE", mixed_mul(w, dE)))
                if delta == 1 and 0 not in I:
                    out.append((f"w~{_set_label(I)}*eta0", mixed_mul(w, eta0)))
        mixed[k] = [(label, to_original(f, cb)) for label, f in out]

    return OneHyperplaneBases(
        basis=cb,
        thetas=[to_original(t, cb) for t in thetas],
        omegas=[to_original(w, cb) for w in omegas],
        mixed=mixed,
        eta0=None if eta0 is None else to_original(eta0, cb),
    )

