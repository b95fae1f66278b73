from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflectinv import catalog
from reflectinv.algebra import FiniteField, Polynomial
from reflectinv.arrangement import arrangement_data
from reflectinv.construct.hilbert import series_from_basis
from reflectinv.construct.mixed import mixed_basis
from reflectinv.forms import MixedForm
from reflectinv.group import close_group, is_invariant
from reflectinv.oracle import (
    SOLVER_CAP,
    AuditReport,
    OracleError,
    appendix_audit,
    audit_element,
    audit_form,
    dimension_table,
    graded_dimension,
    graded_invariants,
    infer_sgc_degrees,
    piece_dimension,
)


def test_unipotent_rank_zero_degree_zero():
    # constant invariant derivations: vectors fixed by W, then by the full group
    assert graded_dimension(catalog.group("unipotent-gl3f3"), 0, 1, "mixed") == 2
    assert graded_dimension(catalog.group("unipotent-gl3f3-full"), 0, 1, "mixed") == 1


def test_trivial_group_sees_everything():
    F = FiniteField(3)
    G = close_group(F, [((1, 0), (0, 1))])
    for d in range(4):
        assert graded_dimension(G, d, 0, "derivations") == 2 * (d + 1)
        assert graded_dimension(G, d, 1, "mixed") == piece_dimension(2, d, 1, "mixed") == 4 * (d + 1)


def test_sl2f2_linear_derivations():
    G = catalog.group("sl2f2")
    assert graded_dimension(G, 1, 0, "derivations") == 1
    assert dimension_table(G, 3, "invariants") == {0: [1, 0, 1, 1]}


def test_returned_elements_are_invariant():
    G = catalog.group("sl2f3")
    for d, k in [(1, 0), (2, 1), (3, 2)]:
        elems = graded_invariants(G, d, k)
        assert elems and all(is_invariant(G, e) for e in elems)


def test_extension_field_route():
    G = catalog.group("sl2f4")
    assert infer_sgc_degrees(G) == [5, 12]


def test_solver_cap():
    G = catalog.group("sl3f2")
    d = 1
    while piece_dimension(3, d, 1, "mixed") <= SOLVER_CAP:
        d += 1
    with pytest.raises(OracleError):
        graded_dimension(G, d, 1, "mixed")


def test_forms_module_divisible_by_inverse_determinant_polynomial():
    # every invariant top form is Q_{det^-1} times an invariant
    G = catalog.group("gl2f3")
    A = arrangement_data(G)
    for d in range(10):
        for w in graded_invariants(G, d, 2, "forms"):
            quot, rem = w.coefficient((0, 1), None).divmod_exact(A.Q_det_inverse)
            assert rem.is_zero() and is_invariant(G, quot)


@pytest.mark.parametrize("name", ["baby", "two-by-two", "sl2f3", "gl2f3"])
def test_oracle_matches_basis_degrees(name):
    G = catalog.group(name)
    mb = mixed_basis(G)
    sgc = infer_sgc_degrees(G)
    predicted = series_from_basis(mb.degrees(), sgc, 6)
    assert dimension_table(G, 6) == predicted


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=6), st.integers(0, 4), st.integers(0, 2))
def test_combinations_of_oracle_elements_stay_invariant(coeffs, d, k):
    G = catalog.group("sl2f3")
    elems = graded_invariants(G, d, k)
    total = MixedForm(G.field, 2, k, "diff_derivation", {})
    for c, e in zip(coeffs, elems):
        total = total + e.scale(c)
    assert is_invariant(G, total)


def test_audit_passes_on_two_by_two():
    report = appendix_audit(catalog.group("two-by-two"), 4)
    assert report.ok and report.checked["a"] > 0 and not report.exemption_witnesses


def test_audit_records_exemption_in_characteristic_two():
    report = appendix_audit(catalog.group("transvection-f2"), 3)
    assert report.delta == 1 and report.ok and report.exemption_witnesses


def test_audit_catches_violation():
    F = FiniteField(5)
    one = Polynomial.one(F, 2)
    # rank 0, j = n with constant coefficient: clause a) fails
    eta = MixedForm(F, 2, 0, "derivation", {((), 1): one})
    report = AuditReport(dmax=0, ranks=[0], b=1, e=2, delta=0)
    audit_form(eta, 1, 2, 0, report)
    assert not report.ok and report.failures[0][0] == "a"


def test_audit_element_requires_invariance():
    G = catalog.group("two-by-two")
    F = G.field
    # 1 (x) v1 is fixed, 1 (x) v2 is not
    eta = MixedForm(F, 2, 0, "derivation", {((), 1): Polynomial.one(F, 2)})
    with pytest.raises(ValueError):
        audit_element(G, eta)
    assert audit_element(G, MixedForm(F, 2, 0, "derivation", {((), 0): Polynomial.one(F, 2)})).ok


def test_piece_dimension_counts():
    assert piece_dimension(3, 2, 1, "mixed") == comb(4, 2) * 3 * 3
    assert piece_dimension(3, 2, 2, "forms") == comb(4, 2) * 3
