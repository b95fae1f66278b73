"""Passing between bases of invariant derivations and invariant 1-forms.

Both directions use cofactor matrices with signs matched to the cofactors, so
that sum_m omega_m theta_m = Q_det det Coef(theta) d theta_E exactly.  The
literal definitions through the dualizer are kept as `*_via_phi` for checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..algebra.poly import Polynomial
from ..algebra.polymatrix import cofactor_matrix
from ..arrangement import ArrangementData, arrangement_data
from ..forms import (
    MixedForm,
    derivation,
    hodge_phi,
    hodge_phi_inverse,
    one_form,
    twisted_product,
    wedge_all,
)
from ..group import GroupData
from ..saito import BasisCertificate, check_derivations, check_oneforms
from .one_hyperplane import ConstructionError


@dataclass
class DualResult:
    source: list[MixedForm]
    dual: list[MixedForm]
    certificate: BasisCertificate  # of the dual set, against its own target


def _twisting_power(A: ArrangementData, n: int) -> Polynomial:
    """Q^(e(n-2)) Q_det, with e read per hyperplane."""
    QQd = (A.Q * A.Q_det).normalize()
    return QQd ** (n - 2) * A.Q_det


def derivations_to_oneforms(G: GroupData, thetas, A: ArrangementData | None = None) -> list[MixedForm]:
    A = A or arrangement_data(G)
    F, n = G.field, G.n
    if n == 1:
        return [one_form(F, 1, [A.Q_det])]
    C = cofactor_matrix([t.coefficient_vector() for t in thetas])
    return [one_form(F, n, [A.Q_det * c for c in row]) for row in C]


def oneforms_to_derivations(G: GroupData, omegas, A: ArrangementData | None = None) -> list[MixedForm]:
    A = A or arrangement_data(G)
    F, n = G.field, G.n
    if n == 1:
        return [derivation(F, 1, [A.Q_det_inverse])]
    C = cofactor_matrix([w.coefficient_vector() for w in omegas])
    d = _twisting_power(A, n)
    return [derivation(F, n, [c.exact_div(d) for c in row]) for row in C]


def derivations_to_oneforms_via_phi(G: GroupData, thetas, A: ArrangementData | None = None) -> list[MixedForm]:
    """omega_i = Phi(Q_det theta_1 ^ .. ^ theta_i-hat ^ .. ^ theta_n) without sign fix."""
    A = A or arrangement_data(G)
    F, n = G.field, G.n
    out = []
    for i in range(n):
        rest = [t for m, t in enumerate(thetas) if m != i]
        if rest:
            w = wedge_all(rest) * A.Q_det
        else:
            w = MixedForm(F, n, 0, "polyvector", {((), None): A.Q_det})
        out.append(hodge_phi(w))
    return out


def oneforms_to_derivations_via_phi(G: GroupData, omegas, A: ArrangementData | None = None) -> list[MixedForm]:
    """theta_i = Phi^-1(twisted wedge of the other omegas / Q_det) without sign fix."""
    A = A or arrangement_data(G)
    n = G.n
    e = G.uniform_e()
    if e is None:
        raise ConstructionError("twisted products need a constant e_H")
    out = []
    for i in range(n):
        rest = [w for m, w in enumerate(omegas) if m != i]
        tw = twisted_product(rest, A.Q, e, G.field, n).exact_div(A.Q_det)
        out.append(hodge_phi_inverse(tw))
    return out


def dualize(G: GroupData, elements, A: ArrangementData | None = None) -> DualResult:
    """Dual basis of a certified derivation basis (or 1-form basis)."""
    A = A or arrangement_data(G)
    elements = list(elements)
    if not elements:
        raise ValueError("nothing to dualize")
    if elements[0].variant == "derivation":
        cert = check_derivations(G, elements, A)
        if not cert.is_basis:
            raise ConstructionError(f"input is not a derivation basis ({cert.diagnosis})")
        dual = derivations_to_oneforms(G, elements, A)
        return DualResult(elements, dual, check_oneforms(G, dual, A))
    if elements[0].variant == "diff_form":
        cert = check_oneforms(G, elements, A)
        if not cert.is_basis:
            raise ConstructionError(f"input is not a 1-form basis ({cert.diagnosis})")
        if not G.maximal_root_spaces():
            raise ConstructionError("dualizing 1-forms needs maximal root spaces")
        dual = oneforms_to_derivations(G, elements, A)
        return DualResult(elements, dual, check_derivations(G, dual, A))
    raise ValueError(f"cannot dualize a {elements[0].variant}")
