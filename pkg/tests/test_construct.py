import pytest

import golden
from reflectinv import catalog
from reflectinv.algebra import FiniteField, Polynomial
from reflectinv.arrangement import arrangement_data
from reflectinv.construct.duality import (
    derivations_to_oneforms,
    derivations_to_oneforms_via_phi,
    dualize,
    oneforms_to_derivations,
    oneforms_to_derivations_via_phi,
)
from reflectinv.construct.hilbert import (
    ExponentLedger,
    expand,
    hilbert_series,
    invariant_series,
    mixed_numerator,
    series_from_basis,
)
from reflectinv.construct.mixed import basic_derivations, char2_basis, mixed_basis
from reflectinv.construct.one_hyperplane import ConstructionError, convenient_basis, one_hyperplane_bases
from reflectinv.construct.slgl import dickson_invariants, q_integer, slgl_data
from reflectinv.forms import euler_differential, mixed_mul
from reflectinv.group import close_group, is_invariant
from reflectinv.saito import check_derivations, check_mixed, check_oneforms

N3_GROUPS = {
    "b1": (3, [((1, 0, 1), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 2))]),
    "b2": (3, [((1, 0, 1), (0, 1, 0), (0, 0, 1)), ((1, 0, 0), (0, 1, 1), (0, 0, 1)), ((1, 0, 0), (0, 1, 0), (0, 0, 2))]),
    "f2": (2, [((1, 0, 1), (0, 1, 0), (0, 0, 1))]),
}


def sum_of_products(omegas, thetas):
    return sum((mixed_mul(w, t) for w, t in zip(omegas, thetas)), start=mixed_mul(omegas[0], thetas[0]).scale(0))


# ---- one hyperplane ----

def test_two_by_two_formulas():
    F, n, thetas, omegas = golden.two_by_two()
    B = one_hyperplane_bases(catalog.group("two-by-two"))
    assert B.thetas == thetas and B.omegas == omegas


def test_dimension_one():
    G = catalog.group("dimension-one")
    B = one_hyperplane_bases(G)
    F = G.field
    x = Polynomial.var(F, 1, 0)
    assert B.thetas[0].coefficient((), 0) == x
    assert B.omegas[0].coefficient((0,), None) == x
    assert [label for label, _ in B.mixed[0]] == ["w~{}*theta1"]
    assert [label for label, _ in B.mixed[1]] == ["w~{}*dthetaE"]


def test_single_transvection_over_f2_uses_eta0():
    F, n, eta0 = golden.transvection_f2_eta0()
    G = catalog.group("transvection-f2")
    B = one_hyperplane_bases(G)
    assert B.eta0 == eta0 and eta0.homogeneous_degree() == 1
    labels = [label for label, _ in B.mixed[1]]
    assert "w~{}*eta0" in labels
    assert check_mixed(G, 1, [f for _, f in B.mixed[1]]).is_basis


@pytest.mark.parametrize("name", ["baby", "two-by-two", "transvection-f2", "transvection-f5", "dimension-one"])
def test_one_hyperplane_bases_certify(name):
    G = catalog.group(name)
    B = one_hyperplane_bases(G)
    assert check_derivations(G, B.thetas).is_basis
    assert check_oneforms(G, B.omegas).is_basis
    for k, elems in B.mixed.items():
        assert check_mixed(G, k, [f for _, f in elems]).is_basis, k


@pytest.mark.parametrize("key", sorted(N3_GROUPS))
def test_one_hyperplane_in_dimension_three(key):
    p, gens = N3_GROUPS[key]
    G = close_group(FiniteField(p), gens)
    B = one_hyperplane_bases(G)
    for k, elems in B.mixed.items():
        assert check_mixed(G, k, [f for _, f in elems]).is_basis, k


def test_convenient_basis_puts_hyperplane_last():
    G = close_group(FiniteField(5), [((1, 0), (1, 1))])  # fixes ker x1
    cb = convenient_basis(G)
    assert cb.b == 1 and cb.e == 1 and cb.delta == 0
    B = one_hyperplane_bases(G)
    assert all(is_invariant(G, t) for t in B.thetas)


def test_one_hyperplane_errors():
    with pytest.raises(ConstructionError):
        one_hyperplane_bases(catalog.group("sl2f3"))


# ---- SL/GL ----

def test_sl2f3_invariants():
    *_, invariants = golden.sl2f3()
    D = slgl_data(FiniteField(3), 2, 1)
    assert D.basic_invariants[0].equal_up_to_scalar(invariants[0])
    assert D.basic_invariants[1].equal_up_to_scalar(invariants[1])


def test_gl2f3_second_invariant():
    *_, f2 = golden.gl2f3()
    D = slgl_data(FiniteField(3), 2, 2)
    assert any(f.equal_up_to_scalar(f2) for f in D.basic_invariants)
    assert D.sgc_degrees == [8, 6] and D.m_star == [3, 1] and D.m == [5, 7] and D.coxeter == 8


def test_sl2f2_numerology():
    D = slgl_data(FiniteField(2), 2, 1)
    assert D.m_star == [2, 1] and D.coxeter == 3


@pytest.mark.parametrize("n,p,k", [(2, 2, 1), (2, 3, 1), (3, 2, 1), (2, 2, 2), (2, 5, 1)])
def test_dickson_invariants(n, p, k):
    F = FiniteField(p, k)
    q = F.q
    D = dickson_invariants(F, n)
    G = close_group(F, catalog.slgl(n, p, k, e=q - 1)[1] if q > 2 else catalog.slgl(n, p, k)[1])
    for i, d in enumerate(D):
        assert d.degree() == q**n - q**i
        assert is_invariant(G, d)


def test_slgl_errors():
    with pytest.raises(ValueError):
        slgl_data(FiniteField(5), 2, 3)
    assert q_integer(3, 2) == 7


# ---- duality ----

def test_baby_dual_oneforms():
    F, n, thetas, omegas, _ = golden.baby()
    G = catalog.group("baby")
    dual = derivations_to_oneforms(G, thetas)
    assert dual[0] == omegas[0]
    assert dual[1] == -omegas[1]  # the listed omega_2 carries the opposite sign


@pytest.mark.parametrize("name", ["sl2f3", "gl2f3"])
def test_dual_oneforms_match_golden(name):
    data = getattr(golden, name.replace("-", "_"))()
    thetas, omegas = data[2], data[3]
    G = catalog.group(name)
    assert derivations_to_oneforms(G, thetas) == omegas


@pytest.mark.parametrize("name", ["baby", "sl2f2", "sl2f3", "gl2f3", "sl3f2", "sl2f4", "dimension-one"])
def test_dualize_round_trip(name):
    G = catalog.group(name)
    thetas, _ = basic_derivations(G)
    there = dualize(G, thetas)
    assert there.certificate.is_basis
    back = dualize(G, there.dual)
    assert back.certificate.is_basis
    for a, b in zip(back.dual, thetas):
        assert a.equal_up_to_scalar(b)


@pytest.mark.parametrize("name", ["sl2f3", "gl2f3", "sl3f2"])
def test_phi_route_differs_by_alternating_sign(name):
    G = catalog.group(name)
    A = arrangement_data(G)
    thetas, _ = basic_derivations(G, A)
    cof = derivations_to_oneforms(G, thetas, A)
    phi = derivations_to_oneforms_via_phi(G, thetas, A)
    for i, (a, b) in enumerate(zip(cof, phi)):
        assert a == (b if i % 2 == 0 else -b)
    back_cof = oneforms_to_derivations(G, cof, A)
    back_phi = oneforms_to_derivations_via_phi(G, cof, A)
    for a, b in zip(back_cof, back_phi):
        assert a.equal_up_to_scalar(b)


@pytest.mark.parametrize("name", ["baby", "sl2f3", "gl2f3", "sl3f2"])
def test_dual_pair_identity(name):
    G = catalog.group(name)
    A = arrangement_data(G)
    thetas, _ = basic_derivations(G, A)
    omegas = derivations_to_oneforms(G, thetas, A)
    e = G.uniform_e()
    lhs = sum_of_products(omegas, thetas)
    assert lhs.equal_up_to_scalar(euler_differential(G.field, G.n) * (A.Q ** e))


def test_dualize_without_maximal_root_spaces_gives_not_basis():
    p, gens = N3_GROUPS["b1"]
    G = close_group(FiniteField(p), gens)
    B = one_hyperplane_bases(G)
    result = dualize(G, B.thetas)
    assert not result.certificate.is_basis
    with pytest.raises(ConstructionError):
        dualize(G, B.omegas)


def test_dualize_rejects_non_basis():
    G = catalog.group("sl2f3")
    thetas, _ = basic_derivations(G)
    with pytest.raises(ConstructionError):
        dualize(G, [thetas[0], thetas[0]])


# ---- mixed bases ----

@pytest.mark.parametrize("variant", ["all_but_one", "explicit"])
@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("name", ["baby", "sl2f3", "gl2f3"])
def test_mixed_basis_every_r(name, r, variant):
    G = catalog.group(name)
    mb = mixed_basis(G, r=r, variant=variant, certify=True)
    assert all(c.is_basis for c in mb.certificates.values())
    assert [len(mb.ranks[k]) for k in range(3)] == [2, 4, 2]


def test_mixed_basis_labels_sl2f3():
    mb = mixed_basis(catalog.group("sl2f3"))
    assert mb.labels(1) == ["dthetaE", "omega1*theta1", "omega1*theta2", "omega2*theta1"]
    assert mb.labels(2) == ["(omega1^omega2)*theta1", "(omega1^omega2)*theta2"]


def test_explicit_variant_uses_dtheta_e():
    mb = mixed_basis(catalog.group("sl2f3"), r=1, variant="explicit")
    assert "omega1*theta1" not in mb.labels(1)
    assert mb.labels(2) == ["omega2*dthetaE", "(omega1^omega2)*theta2"]


def test_char2_basis():
    G = catalog.group("sl2f2")
    mb = char2_basis(G)
    assert mb.labels(1) == ["omega1*theta1", "omega1*theta2", "dthetaE", "eta0"]
    for k in range(3):
        assert check_mixed(G, k, mb.elements(k)).is_basis


def test_char2_preconditions():
    with pytest.raises(ConstructionError):
        char2_basis(catalog.group("sl2f3"))
    with pytest.raises(ConstructionError):
        mixed_basis(catalog.group("sl2f2"), variant="all_but_one")
    with pytest.raises(ValueError):
        mixed_basis(catalog.group("sl2f3"), r=3)


def test_sl3f2_rank_zero_and_three():
    G = catalog.group("sl3f2")
    mb = mixed_basis(G)
    for k in (0, 3):
        assert check_mixed(G, k, mb.elements(k)).is_basis


# ---- Hilbert series ----

def test_dimension_one_series():
    # (q + t) / (1 - q^2)
    L = ExponentLedger(m_star=[1], m=[1], coxeter=2, sgc_degrees=[2], arrangement_size=1)
    s = hilbert_series(L, 6)
    assert s[0] == [0, 1, 0, 1, 0, 1, 0]
    assert s[1] == [1, 0, 1, 0, 1, 0, 1]


def test_sl2f2_series_has_single_degree_zero_rank_one_element():
    L = ExponentLedger(m_star=[2, 1], m=[1, 2], coxeter=3, sgc_degrees=[3, 2], arrangement_size=3, structure="char2")
    s = hilbert_series(L, 4)
    assert s[1][0] == 1


@pytest.mark.parametrize("m_star,m,h,degs", [([3, 1], [1, 3], 4, [4, 6]), ([3, 1], [5, 7], 8, [8, 6]), ([4, 2, 1], [3, 5, 6], 7, [4, 6, 7])])
def test_rank_zero_slice_is_derivation_series(m_star, m, h, degs):
    L = ExponentLedger(m_star=m_star, m=m, coxeter=h, sgc_degrees=degs, arrangement_size=h)
    s = hilbert_series(L, 20)
    base = invariant_series(degs, 20)
    expected = [sum(base[d - x] for x in m_star if d >= x) for d in range(21)]
    assert s[0] == expected


def test_mixed_numerator_at_t_one_counts_rank():
    # the numerator evaluated at q = 1 counts basis elements: n 2^n in total
    L = ExponentLedger(m_star=[3, 1], m=[1, 3], coxeter=4, sgc_degrees=[4, 6], arrangement_size=4)
    num = mixed_numerator(L)
    by_t = {}
    for (_, t), c in num.items():
        by_t[t] = by_t.get(t, 0) + c
    assert by_t == {0: 2, 1: 4, 2: 2}


def test_uncancelled_negative_powers_raise():
    with pytest.raises(ValueError):
        expand({(-1, 0): 1}, [2], 4, 1)


def test_series_from_basis():
    s = series_from_basis({0: [1], 1: [0]}, [2], 4)
    assert s == {0: [0, 1, 0, 1, 0], 1: [1, 0, 1, 0, 1]}
