import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reflectinv import catalog
from reflectinv.algebra import FiniteField, Polynomial
from reflectinv.construct.mixed import mixed_basis
from reflectinv.forms import MixedForm, column_keys
from reflectinv.serialize import (
    InputError,
    basis_file_from_json,
    element_from_json,
    element_to_json,
    field_from_json,
    field_to_json,
    form_from_json,
    form_to_json,
    group_from_json,
    group_to_json,
)

GROUPS = Path(__file__).resolve().parent.parent / "data" / "groups"


@pytest.mark.parametrize("path", sorted(GROUPS.glob("*.json")), ids=lambda p: p.stem)
def test_shipped_group_files_match_catalog(path):
    G = group_from_json(json.loads(path.read_text()))
    H = catalog.group(path.stem)
    assert G.order == H.order and G.generators == H.generators


def test_group_round_trip_over_extension_field():
    G = catalog.group("sl2f4")
    data = json.loads(json.dumps(group_to_json(G)))
    H = group_from_json(data)
    assert H.field == G.field and H.generators == G.generators


def test_field_json():
    F = FiniteField(2, 2)
    assert field_from_json(field_to_json(F)) == F
    assert field_to_json(FiniteField(7)) == {"p": 7, "k": 1, "modulus": None}
    with pytest.raises(InputError):
        field_from_json({"p": 6})
    with pytest.raises(InputError):
        field_from_json([3])


def test_elements():
    F = FiniteField(3, 2)
    for a in range(F.q):
        assert element_from_json(F, element_to_json(F, a)) == a
    assert element_from_json(FiniteField(5), -1) == 4
    for bad in [True, 9, "x1", 1.5]:
        with pytest.raises(InputError):
            element_from_json(F, bad)


F3 = FiniteField(3)


def poly3():
    term = st.tuples(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(1, 2))
    return st.lists(term, max_size=3).map(lambda ts: Polynomial(F3, 2, dict(ts)))


@st.composite
def mixed_forms(draw):
    rank = draw(st.integers(0, 2))
    variant = draw(st.sampled_from(["diff_derivation", "diff_form"] if rank else ["derivation", "diff_derivation"]))
    keys = column_keys(2, rank, variant)
    return MixedForm(F3, 2, rank, variant, {k: draw(poly3()) for k in keys})


@settings(max_examples=60)
@given(mixed_forms())
def test_form_round_trip(f):
    assert form_from_json(json.loads(json.dumps(form_to_json(f))), F3, 2) == f


def test_basis_file_shapes():
    G = catalog.group("sl2f3")
    mb = mixed_basis(G)
    elems = [form_to_json(f) for f in mb.elements(1)]
    assert basis_file_from_json(elems, G.field, 2) == mb.elements(1)
    assert basis_file_from_json({"elements": elems}, G.field, 2) == mb.elements(1)
    report = {"ranks": {str(k): [{"form": form_to_json(f)} for f in mb.elements(k)] for k in range(3)}}
    assert basis_file_from_json(report, G.field, 2, 2) == mb.elements(2)
    with pytest.raises(InputError):
        basis_file_from_json(report, G.field, 2)
    with pytest.raises(InputError):
        basis_file_from_json(report, G.field, 2, 5)


@pytest.mark.parametrize(
    "data",
    [
        "form",
        {"rank": 1, "variant": "wedge", "terms": []},
        {"rank": 1, "terms": [{"I": [1, 2], "j": 1, "poly": "1"}]},
        {"rank": 0, "terms": [{"I": [], "j": 3, "poly": "1"}]},
        {"rank": 0, "terms": [{"I": [], "j": 1, "poly": "x9"}]},
        {"rank": 0, "terms": [{"I": [], "j": 1}]},
    ],
)
def test_bad_forms(data):
    with pytest.raises(InputError):
        form_from_json(data, F3, 2)
