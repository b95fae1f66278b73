"""Reflection arrangement data and the determinant targets derived from it."""
from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .algebra import linalg
from .algebra.poly import Polynomial
from .group import GroupData, character_values, normalize_vector


def binom(a: int, b: int) -> int:
    """Binomial coefficient that vanishes when b < 0 or a < b."""
    if b < 0 or a < b or a < 0:
        return 0
    return comb(a, b)


def a_exponent(n: int, b: int, delta: int, k: int) -> int:
    """Exponent a_{H,k} of the hyperplane in the extra factor Q_k."""
    return (n - delta) * (binom(n - 1, k) - binom(n - b - 1, k)) + binom(n - 1, k - 1) - binom(n - b - 1, k - 1)


def target_exponent(n: int, e: int, b: int, delta: int, k: int) -> int:
    """Exponent of ell_H in the rank-k determinant target."""
    return binom(n - 1, k) + (e - 1) * (n - 1) * binom(n - 1, k - 1) + e * a_exponent(n, b, delta, k)


@dataclass
class ArrangementData:
    group: GroupData
    linear_forms: list[Polynomial]
    Q: Polynomial
    Q_det: Polynomial
    Q_tilde: Polynomial  # Q of the arrangement with multiplicities e_H * b_H
    Q_det_inverse: Polynomial
    e: list[int]
    b: list[int]
    delta: list[int]
    orbits: list[list[int]]

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def size(self) -> int:
        return len(self.linear_forms)

    def a_table(self, k: int) -> list[int]:
        return [a_exponent(self.n, b, d, k) for b, d in zip(self.b, self.delta)]

    def Q_k(self, k: int) -> Polynomial:
        return _product(self.group, self.linear_forms, [e * a for e, a in zip(self.e, self.a_table(k))])

    def target_degree(self, k: int) -> int:
        n = self.n
        return sum(target_exponent(n, e, b, d, k) for e, b, d in zip(self.e, self.b, self.delta))

    def coxeter_number(self) -> int | None:
        """e|A| when all root spaces are maximal and e_H is constant, else None."""
        if not self.group.maximal_root_spaces() or len(set(self.e)) > 1:
            return None
        return self.e[0] * self.size if self.e else 0

    def oneform_target_degree(self) -> int:
        return sum(e * b + e - 1 for e, b in zip(self.e, self.b))


def _product(G: GroupData, forms: list[Polynomial], exps: list[int]) -> Polynomial:
    out = Polynomial.one(G.field, G.n)
    for f, m in zip(forms, exps):
        if m:
            out = out * f**m
    return out.normalize()


def arrangement_data(G: GroupData) -> ArrangementData:
    F = G.field
    forms = [h.linear_form(F) for h in G.hyperplanes]
    e = [h.e for h in G.hyperplanes]
    b = [h.b for h in G.hyperplanes]
    delta = [h.delta for h in G.hyperplanes]
    return ArrangementData(
        group=G,
        linear_forms=forms,
        Q=_product(G, forms, [1] * len(forms)),
        Q_det=_product(G, forms, [x - 1 for x in e]),
        Q_tilde=_product(G, forms, [x * y for x, y in zip(e, b)]),
        Q_det_inverse=_product(G, forms, [1 if x != 1 else 0 for x in e]),
        e=e,
        b=b,
        delta=delta,
        orbits=[list(o) for o in G.orbits],
    )


def saito_target(A: ArrangementData, k: int) -> Polynomial:
    """Normalized Q^C(n-1,k) * Q_det^((n-1)C(n-1,k-1)) * Q_k.

    The degree is cross-checked against the closed-form exponent sum.
    """
    n = A.n
    exps = [target_exponent(n, e, b, d, k) for e, b, d in zip(A.e, A.b, A.delta)]
    target = _product(A.group, A.linear_forms, exps)
    direct = (
        A.Q ** binom(n - 1, k) * A.Q_det ** ((n - 1) * binom(n - 1, k - 1)) * A.Q_k(k)
    ).normalize()
    if direct != target or target.degree() != A.target_degree(k):
        raise AssertionError("determinant target disagrees with its exponent table")
    return target


def derivation_target(A: ArrangementData) -> Polynomial:
    return A.Q


def oneform_target(A: ArrangementData) -> Polynomial:
    return (A.Q_tilde * A.Q_det).normalize()


def q_chi(A: ArrangementData, G: GroupData, chi) -> Polynomial:
    """prod ell_H^{c_H}, c_H the least c >= 0 with chi(s_H) = det(s_H)^(-c).

    `chi` gives the character on the generators.
    """
    F = G.field
    values = character_values(G, chi)
    exps = []
    for h in G.hyperplanes:
        s = h.s_H
        x = values[G.index[s]]
        d = linalg.det(F, s)
        c = next((c for c in range(max(h.e, 1)) if F.pow(d, -c) == x), None)
        if c is None:
            raise ValueError("character does not restrict to a power of det on G_H")
        exps.append(c)
    return _product(G, A.linear_forms, exps)


@dataclass
class NormalForm:
    """A coordinate change for a prime field group with maximal root spaces."""

    m: int
    chosen: list[int]  # hyperplane indices H_1..H_m
    new_forms: tuple[tuple[int, ...], ...]  # rows: x'_i in old coordinates
    change_of_basis: tuple[tuple[int, ...], ...]  # columns: v'_j in old coordinates
    product_matches: bool
    all_in_span: bool
    closed_under_pencils: bool


def prime_field_normal_form(G: GroupData) -> NormalForm:
    """Choose H_1, H_2, ... greedily (colex on ell_H) until the span covers A.

    Returns the new linear coordinates x'_i = ell_{H_i} completed by standard
    forms, with checks that every ell_H lies in span(x'_1..x'_m), that |A| is
    (p^m - 1)/(p - 1), and that every pencil through two members lies in A.
    """
    F, n = G.field, G.n
    if not F.is_prime:
        raise ValueError("normal form needs a prime field")
    if not G.maximal_root_spaces():
        raise ValueError("normal form needs maximal root spaces")
    ells = [h.ell for h in G.hyperplanes]
    order = sorted(range(len(ells)), key=lambda i: tuple(reversed(ells[i])))
    chosen: list[int] = []
    span_rows: list[tuple[int, ...]] = []

    def in_span(v) -> bool:
        return linalg.rank(F, span_rows + [v]) == len(span_rows)

    while True:
        nxt = next((i for i in order if not (span_rows and in_span(ells[i]))), None)
        if nxt is None:
            break
        chosen.append(nxt)
        span_rows.append(ells[nxt])
    m = len(chosen)
    new_forms = linalg.complete_basis(F, span_rows, n)
    Pinv = linalg.to_matrix(new_forms)
    P = linalg.inverse(F, Pinv)

    p = F.p
    all_in_span = all(in_span(v) for v in ells)
    count_ok = len(ells) == (p**m - 1) // (p - 1)
    ellset = set(ells)
    pencils = True
    for i in range(len(ells)):
        for j in range(i + 1, len(ells)):
            for c in F.elements():
                w = tuple(F.add(a, F.mul(c, bb)) for a, bb in zip(ells[j], ells[i]))
                if any(w) and normalize_vector(F, w) not in ellset:
                    pencils = False

    # Q in the new coordinates should be the product of all normalized forms
    # in span(x'_1..x'_m), i.e. every point of P^{m-1}(F_p).
    x = [Polynomial.var(F, n, i) for i in range(n)]
    expected = Polynomial.one(F, n)
    for i in range(m):
        for tail in range(p**i):
            form = x[i]
            t = tail
            for j in range(i):
                form = form + x[j] * (t % p)
                t //= p
            expected = expected * form
    Q_old = Polynomial.one(F, n)
    for h in G.hyperplanes:
        Q_old = Q_old * h.linear_form(F)
    # old x_k = sum_i P[k][i] x'_i
    images = [Polynomial.linear(F, n, P[k]) for k in range(n)]
    Q_new = Q_old.substitute(images)
    return NormalForm(
        m=m,
        chosen=chosen,
        new_forms=Pinv,
        change_of_basis=P,
        product_matches=count_ok and Q_new.equal_up_to_scalar(expected),
        all_in_span=all_in_span,
        closed_under_pencils=pencils,
    )
