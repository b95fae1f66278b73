"""Rank-graded bases of invariant mixed forms."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra import linalg
from ..algebra.poly import Polynomial
from ..arrangement import ArrangementData, arrangement_data, prime_field_normal_form
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
from ..group import GroupData, act, close_group, reflection_data
from ..saito import BasisCertificate, as_mixed, check_derivations, check_mixed
from .duality import derivations_to_oneforms
from .one_hyperplane import ConstructionError, one_hyperplane_bases

VARIANTS = ("auto", "all_but_one", "explicit", "char2", "one_hyperplane")


@dataclass
class MixedBasis:
    variant: str
    r: int | None
    thetas: list[MixedForm]
    omegas: list[MixedForm]
    ranks: dict[int, list[tuple[str, MixedForm]]]
    certificates: dict[int, BasisCertificate] = field(default_factory=dict)

    def elements(self, k: int) -> list[MixedForm]:
        return [f for _, f in self.ranks[k]]

    def labels(self, k: int) -> list[str]:
        return [label for label, _ in self.ranks[k]]

    def degrees(self) -> dict[int, list[int | None]]:
        return {k: [f.homogeneous_degree() for _, f in v] for k, v in self.ranks.items()}


# ---- basic derivations ----

def frobenius_derivations(F, n: int, q: int | None = None) -> list[MixedForm]:
    """theta_i = sum_j x_j^(q^(n-i)) (x) v_j, i = 1..n."""
    q = q or F.q
    return [
        derivation(F, n, [Polynomial.var(F, n, j) ** (q ** (n - i)) for j in range(n)])
        for i in range(1, n + 1)
    ]


def basic_derivations(G: GroupData, A: ArrangementData | None = None) -> tuple[list[MixedForm], str]:
    """A certified basis of invariant derivations and the route that found it."""
    A = A or arrangement_data(G)
    F, n = G.field, G.n
    candidates = []
    if G.fixes_single_hyperplane():
        candidates.append(("one_hyperplane", lambda: one_hyperplane_bases(G, ranks=[]).thetas))
    if F.is_prime and G.maximal_root_spaces() and G.hyperplanes:
        def normal_form_route():
            nf = prime_field_normal_form(G)
            m, p = nf.m, F.p
            x = [Polynomial.var(F, n, i) for i in range(n)]
            one, zero = Polynomial.one(F, n), Polynomial.zero(F, n)
            new = [derivation(F, n, [xj ** (p ** (m - i)) for xj in x]) for i in range(1, m + 1)]
            new += [derivation(F, n, [one if j == i else zero for j in range(n)]) for i in range(m, n)]
            return [act(nf.change_of_basis, t) for t in new]
        candidates.append(("prime_field_normal_form", normal_form_route))
    candidates.append(("frobenius", lambda: frobenius_derivations(F, n)))
    for route, build in candidates:
        thetas = build()
        if check_derivations(G, thetas, A).is_basis:
            return thetas, route
    raise ConstructionError("no construction of basic derivations applies to this group")


# ---- labels ----

def _omega_label(I) -> str:
    if not I:
        return ""
    if len(I) == 1:
        return f"omega{I[0] + 1}"
    return "(" + "^".join(f"omega{i + 1}" for i in I) + ")"


def _product_label(I, right: str) -> str:
    left = _omega_label(I)
    return f"{left}*{right}" if left else right


# ---- the main constructions ----

def _twisted(omegas, I, divisor: Polynomial, F, n) -> MixedForm:
    w = wedge_all([omegas[i] for i in I], F, n)
    k = len(I)
    return w.exact_div(divisor ** (k - 1)) if k > 1 else w


def _needs_maximal(G: GroupData, variant: str) -> None:
    if not G.maximal_root_spaces():
        raise ConstructionError(f"variant {variant} needs maximal root spaces")
    if G.field.p == 2 and any(h.delta for h in G.hyperplanes):
        raise ConstructionError(f"variant {variant} does not apply when some G_H = {{1, t}} in characteristic 2")


def mixed_basis(
    G: GroupData,
    thetas=None,
    r: int | None = None,
    variant: str = "auto",
    certify: bool = False,
    A: ArrangementData | None = None,
) -> MixedBasis:
    """Bases of (S (x) wedge^k V* (x) V)^G for k = 0..n.

    `r` is 1-based and defaults to n.  `auto` picks the one-hyperplane
    construction, the characteristic-2 construction, or all_but_one.
    """
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    A = A or arrangement_data(G)
    F, n = G.field, G.n
    if variant == "auto":
        if F.p == 2 and any(h.delta for h in G.hyperplanes):
            variant = "one_hyperplane" if len(G.hyperplanes) == 1 else "char2"
        elif G.fixes_single_hyperplane() and not G.maximal_root_spaces():
            variant = "one_hyperplane"
        else:
            variant = "all_but_one"

    if variant == "one_hyperplane":
        ohb = one_hyperplane_bases(G)
        result = MixedBasis(variant, None, ohb.thetas, ohb.omegas, ohb.mixed)
    elif variant == "char2":
        result = char2_basis(G, A)
    else:
        _needs_maximal(G, variant)
        if thetas is None:
            thetas, _ = basic_derivations(G, A)
        thetas = list(thetas)
        omegas = derivations_to_oneforms(G, thetas, A)
        r = n if r is None else r
        if not 1 <= r <= n:
            raise ValueError(f"r must lie in 1..{n}")
        divisor = (A.Q * A.Q_det).normalize()
        dE = euler_differential(F, n)
        ranks: dict[int, list[tuple[str, MixedForm]]] = {k: [] for k in range(n + 1)}
        rr = r - 1
        for k in range(n + 1):
            for I in colex_subsets(n, k):
                w = _twisted(omegas, I, divisor, F, n)
                for j in range(n):
                    if variant == "all_but_one":
                        if k == 1 and I == (rr,) and j == rr:
                            continue
                    elif rr in I and j == rr:
                        continue
                    ranks[k].append((_product_label(I, f"theta{j + 1}"), mixed_mul(w, thetas[j])))
                if variant == "explicit" and rr not in I and k + 1 <= n:
                    ranks[k + 1].append((_product_label(I, "dthetaE"), mixed_mul(w, dE)))
            if variant == "all_but_one" and k == 1:
                ranks[1].insert(0, ("dthetaE", dE))
        result = MixedBasis(variant, r, thetas, omegas, ranks)
    if certify:
        result.certificates = {k: check_mixed(G, k, result.elements(k), A) for k in result.ranks}
    return result


# ---- characteristic 2 with G_H = {1, t} ----

def _fixed_line(F, g):
    d = [[F.sub(g[i][j], 1 if i == j else 0) for j in range(2)] for i in range(2)]
    return tuple(linalg.nullspace(F, d, 2)[0])


def _char2_coordinates(G: GroupData):
    F = G.field
    trans = [r for r in G.reflections if r.kind == "transvection"]
    pool = [g for g in G.generators if reflection_data(F, g) is not None]
    pool += [r.matrix for r in trans if r.matrix not in pool]
    for t in pool:
        for t2 in pool:
            dt, dt2 = reflection_data(F, t), reflection_data(F, t2)
            if dt[0] == dt2[0]:
                continue
            if close_group(F, [t, t2], cap=G.order, classify=False).order != G.order:
                continue
            v2 = _fixed_line(F, t2)
            v1 = tuple(F.sub(a, b) for a, b in zip(linalg.mat_vec(F, t, v2), v2))
            P = linalg.transpose([v1, v2])
            Pinv = linalg.inverse(F, P)
            tt = linalg.mat_mul(F, linalg.mat_mul(F, Pinv, t), P)
            tt2 = linalg.mat_mul(F, linalg.mat_mul(F, Pinv, t2), P)
            if tt != ((1, 1), (0, 1)) or tt2[0] != (1, 0) or tt2[1][1] != 1:
                continue
            return P, Pinv, tt2[1][0]
    raise ConstructionError("no pair of transvections in standard position generates the group")


def char2_basis(G: GroupData, A: ArrangementData | None = None) -> MixedBasis:
    """The eight-element basis for n = 2, characteristic 2, G_H = {1, t}, |A| > 1."""
    A = A or arrangement_data(G)
    F, n = G.field, G.n
    if F.p != 2 or n != 2 or len(G.hyperplanes) < 2 or not all(h.delta == 1 for h in G.hyperplanes):
        raise ConstructionError("char2 construction needs n = 2, p = 2, |A| > 1 and every G_H of order 2")
    P, Pinv, alpha = _char2_coordinates(G)
    x1, x2 = Polynomial.var(F, 2, 0), Polynomial.var(F, 2, 1)
    Q = act(Pinv, A.Q)
    dQ = Q.degree()
    c = Q.coefficient((dQ - 1, 1))
    if not c:
        raise ConstructionError("Q has no x1^(deg Q - 1) x2 term in standard position")
    Q = Q.scale(F.inv(c))
    Q1, Q2 = Q.partial(0), Q.partial(1)
    theta1 = derivation(F, 2, [Q2, Q1])
    theta2 = euler_derivation(F, 2)
    omega1 = one_form(F, 2, [x2, x1])
    omega2 = one_form(F, 2, [Q1, Q2])
    f = x1 * x1 + x1 * x2 + (x2 * x2).scale(F.inv(alpha))
    eta0 = (mixed_mul(omega2, theta1) + mixed_mul(omega1, theta2) * f ** (dQ - 2)).exact_div(Q)
    w12 = wedge_all([omega1, omega2]).exact_div(Q)
    dE = euler_differential(F, 2)
    ranks = {
        0: [("theta1", as_mixed(theta1)), ("theta2", as_mixed(theta2))],
        1: [
            ("omega1*theta1", mixed_mul(omega1, theta1)),
            ("omega1*theta2", mixed_mul(omega1, theta2)),
            ("dthetaE", dE),
            ("eta0", eta0),
        ],
        2: [("(omega1^omega2)*theta1", mixed_mul(w12, theta1)), ("(omega1^omega2)*theta2", mixed_mul(w12, theta2))],
    }
    back = {k: [(label, act(P, f_)) for label, f_ in v] for k, v in ranks.items()}
    return MixedBasis(
        "char2",
        None,
        [act(P, theta1), act(P, theta2)],
        [act(P, omega1), act(P, omega2)],
        back,
    )
