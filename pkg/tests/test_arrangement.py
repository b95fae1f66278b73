import pytest

from reflectinv import catalog
from reflectinv.algebra import Polynomial
from reflectinv.arrangement import (
    a_exponent,
    arrangement_data,
    oneform_target,
    prime_field_normal_form,
    q_chi,
    saito_target,
    target_exponent,
)
from reflectinv.construct.slgl import q_integer
from reflectinv.group import det_character, is_semi_invariant


def P(s, G):
    return Polynomial.parse(s, G.field, G.n)


def test_exponent_table():
    # n = 2, b = 1 worked by hand: (a_0, a_1, a_2) = (0, 2, 1), and (0, 1, 1) when delta = 1
    assert [a_exponent(2, 1, 0, k) for k in range(3)] == [0, 2, 1]
    assert [a_exponent(2, 1, 1, k) for k in range(3)] == [0, 1, 1]
    # no transvections: no extra factor
    for n in range(1, 5):
        assert all(a_exponent(n, 0, 0, k) == 0 for k in range(n + 1))
    # SL2(F3) rank 1: each of 4 lines contributes 1 + 0 + 2 = 3, matching 3 + 1 + 4 + 4 (degrees of the basis)
    assert 4 * target_exponent(2, 1, 1, 0, 1) == 12


def test_two_by_two_polynomials():
    G = catalog.group("two-by-two")
    A = arrangement_data(G)
    x2 = P("x2", G)
    assert A.Q == x2 and A.Q_det == x2 and A.Q_tilde == x2**2


def test_gl2f3_polynomials():
    G = catalog.group("gl2f3")
    A = arrangement_data(G)
    Q = P("x1^3*x2 - x1*x2^3", G)
    assert A.Q.equal_up_to_scalar(Q)
    assert A.Q_det.equal_up_to_scalar(Q)
    assert A.coxeter_number() == 8
    assert oneform_target(A).equal_up_to_scalar(Q**3)


def test_unipotent_arrangement():
    G = catalog.group("unipotent-gl3f3")
    A = arrangement_data(G)
    assert A.Q.equal_up_to_scalar(P("x2^3*x3 - x2*x3^3", G))
    assert A.coxeter_number() is None


@pytest.mark.parametrize("name,n,q", [("sl2f2", 2, 2), ("sl2f3", 2, 3), ("sl3f2", 3, 2), ("gl2f3", 2, 3), ("sl2f4", 2, 4)])
def test_arrangement_size_is_q_integer(name, n, q):
    G = catalog.group(name)
    assert len(G.hyperplanes) == q_integer(n, q)
    assert len(G.orbits) == 1


@pytest.mark.parametrize("name", ["baby", "sl2f2", "sl2f3", "gl2f3", "unipotent-gl3f3", "lower-block-f3"])
def test_saito_targets_consistent(name):
    G = catalog.group(name)
    A = arrangement_data(G)
    for k in range(G.n + 1):
        t = saito_target(A, k)
        assert t.degree() == A.target_degree(k)
    assert saito_target(A, 0) == A.Q


def test_q_det_is_det_semi_invariant():
    for name in ["gl2f3", "two-by-two", "gl2f4"]:
        G = catalog.group(name)
        A = arrangement_data(G)
        assert is_semi_invariant(G, det_character(G), A.Q_det)
        assert is_semi_invariant(G, det_character(G, -1), A.Q_det_inverse)


def test_q_chi_for_determinant():
    G = catalog.group("gl2f3")
    A = arrangement_data(G)
    assert q_chi(A, G, det_character(G, -1)).equal_up_to_scalar(A.Q_det)
    assert q_chi(A, G, [1] * len(G.generators)) == Polynomial.one(G.field, 2)


def test_prime_field_normal_form():
    G = catalog.group("sl3f2")
    nf = prime_field_normal_form(G)
    assert nf.m == 3 and nf.product_matches and nf.all_in_span and nf.closed_under_pencils
