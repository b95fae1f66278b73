"""JSON I/O for groups, mixed forms and reports.

Group input:
    {"field": {"p": 3, "k": 1, "modulus": [..]}, "generators": [[[1, 1], [0, 1]]], "cap": 100000}
or  {"catalog": "sl2f3"}.

Matrix entries are field codes (ints in [0, q)) or strings in the generator t.
Mixed forms store 1-based indices and canonical polynomial strings.
"""
from __future__ import annotations

import json

from . import SCHEMA
from .algebra import FiniteField, Polynomial
from .forms import VARIANTS, MixedForm
from .group import DEFAULT_CAP, GroupData, close_group


class InputError(ValueError):
    """Malformed JSON input."""


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


def field_to_json(F: FiniteField) -> dict:
    return {"p": F.p, "k": F.k, "modulus": list(F.modulus) if F.k > 1 else None}


def field_from_json(data) -> FiniteField:
    if not isinstance(data, dict) or "p" not in data:
        raise InputError("field must be an object with at least 'p'")
    modulus = data.get("modulus")
    try:
        return FiniteField(int(data["p"]), int(data.get("k", 1)), modulus)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad field: {exc}") from exc


def element_from_json(F: FiniteField, x) -> int:
    if isinstance(x, bool):
        raise InputError("booleans are not field elements")
    if isinstance(x, int):
        if F.is_prime:
            return x % F.p
        if not 0 <= x < F.q:
            raise InputError(f"field code {x} out of range for F_{F.q}")
        return x
    if isinstance(x, str):
        try:
            c = Polynomial.parse(x, F, 1)
        except ValueError as exc:
            raise InputError(f"bad field element {x!r}: {exc}") from exc
        if not c.is_constant():
            raise InputError(f"field element {x!r} mentions a variable")
        return c.constant_term()
    raise InputError(f"cannot read {x!r} as a field element")


def element_to_json(F: FiniteField, a: int):
    return a if F.is_prime else F.format(a)


def matrix_to_json(F: FiniteField, g) -> list:
    return [[element_to_json(F, a) for a in row] for row in g]


def group_from_json(data, cap: int | None = None) -> GroupData:
    if not isinstance(data, dict):
        raise InputError("group input must be a JSON object")
    if "catalog" in data:
        from . import catalog

        try:
            F, gens = catalog.GROUPS[data["catalog"]]()
        except KeyError:
            raise InputError(f"unknown catalog group {data['catalog']!r}") from None
    else:
        F = field_from_json(data.get("field"))
        raw = data.get("generators")
        if not isinstance(raw, list) or not raw:
            raise InputError("'generators' must be a nonempty list of matrices")
        try:
            gens = [tuple(tuple(element_from_json(F, x) for x in row) for row in g) for g in raw]
        except TypeError as exc:
            raise InputError(f"bad generator matrix: {exc}") from exc
    cap = cap or data.get("cap") or DEFAULT_CAP
    try:
        return close_group(F, gens, cap=int(cap))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def group_to_json(G: GroupData) -> dict:
    return {
        "field": field_to_json(G.field),
        "generators": [matrix_to_json(G.field, g) for g in G.generators],
    }


def form_to_json(f: MixedForm) -> dict:
    terms = []
    for I, j in f.keys():
        c = f.coefficient(I, j)
        if c.is_zero():
            continue
        terms.append({"I": [i + 1 for i in I], "j": None if j is None else j + 1, "poly": str(c)})
    return {"rank": f.rank, "variant": f.variant, "terms": terms}


def form_from_json(data, F: FiniteField, n: int) -> MixedForm:
    if not isinstance(data, dict):
        raise InputError("a form must be a JSON object")
    variant = data.get("variant", "diff_derivation")
    if variant not in VARIANTS:
        raise InputError(f"unknown form variant {variant!r}")
    rank = data.get("rank", 0)
    coeffs = {}
    for t in data.get("terms", []):
        try:
            I = tuple(sorted(i - 1 for i in t.get("I", [])))
            j = t.get("j")
            j = None if j is None else j - 1
            poly = Polynomial.parse(str(t["poly"]), F, n)
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad term {t!r}: {exc}") from exc
        if len(I) != rank or any(not 0 <= i < n for i in I) or (j is not None and not 0 <= j < n):
            raise InputError(f"term {t!r} does not fit rank {rank} in dimension {n}")
        key = (I, j)
        coeffs[key] = coeffs[key] + poly if key in coeffs else poly
    try:
        return MixedForm(F, n, rank, variant, coeffs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def basis_file_from_json(data, F: FiniteField, n: int, k: int | None = None) -> list[MixedForm]:
    """Read a bare list of forms, {"elements": [...]}, or a build-basis report.

    A build-basis report holds several ranks; `k` picks one (default: the
    only rank present).
    """
    if isinstance(data, dict) and "ranks" in data:
        ranks = data["ranks"]
        if k is None:
            if len(ranks) != 1:
                raise InputError("report holds several ranks; choose one with --k")
            k = int(next(iter(ranks)))
        if str(k) not in ranks:
            raise InputError(f"report has no rank {k}")
        data = ranks[str(k)]
    elif isinstance(data, dict) and "elements" in data:
        data = data["elements"]
    if not isinstance(data, list):
        raise InputError("basis file must hold a list of forms")
    out = []
    for d in data:
        if not isinstance(d, dict):
            raise InputError(f"cannot read {d!r} as a form")
        out.append(form_from_json(d["form"] if "form" in d else d, F, n))
    return out


def envelope(command: str, body: dict) -> dict:
    return {"schema": SCHEMA, "command": command, **body}
