"""Saito-type basis certificates for invariant derivations, forms and mixed forms."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .algebra.poly import Polynomial
from .arrangement import ArrangementData, arrangement_data, oneform_target, saito_target
from .forms import MixedForm, coef_det
from .group import GroupData, is_invariant

# in the order they are reported; the first one is the diagnosis
FAILURES = ("not_invariant", "wrong_count", "degree_mismatch", "dependent", "determinant_mismatch")


@dataclass
class BasisCertificate:
    kind: str
    rank: int
    verdict: str  # "basis" or "not_basis"
    invariant: list[bool]
    degrees: list[int | None]
    degree_sum: int | None
    target_degree: int
    determinant: Polynomial | None
    target: Polynomial
    failures: list[str] = field(default_factory=list)
    floor_divides: bool | None = None

    @property
    def is_basis(self) -> bool:
        return self.verdict == "basis"

    @property
    def diagnosis(self) -> str | None:
        return self.failures[0] if self.failures else None

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "rank": self.rank,
            "verdict": self.verdict,
            "diagnosis": self.diagnosis,
            "failures": list(self.failures),
            "invariant": list(self.invariant),
            "degrees": list(self.degrees),
            "degree_sum": self.degree_sum,
            "target_degree": self.target_degree,
            "determinant": None if self.determinant is None else str(self.determinant),
            "target": str(self.target),
            "floor_divides": self.floor_divides,
        }


def _certify(kind, rank, G, elements, expected_count, target, target_degree, variant) -> BasisCertificate:
    elements = list(elements)
    for e in elements:
        if e.variant != variant or e.rank != rank or e.n != G.n:
            raise ValueError(f"{kind} check got a {e.variant} of rank {e.rank}")
    invariant = [is_invariant(G, e) for e in elements]
    degrees = [e.homogeneous_degree() if e else None for e in elements]
    homogeneous = all(d is not None for d in degrees)
    degree_sum = sum(degrees) if homogeneous else None
    failures = []
    if not all(invariant):
        failures.append("not_invariant")
    det = None
    if len(elements) != expected_count:
        failures.append("wrong_count")
    else:
        det = coef_det(elements).normalize()
        if homogeneous and degree_sum != target_degree:
            failures.append("degree_mismatch")
        if det.is_zero():
            failures.append("dependent")
        if det and det != target:
            failures.append("determinant_mismatch")
    floor = None
    if det is not None and det and all(invariant):
        floor = target.divides(det)
    verdict = "basis" if not failures else "not_basis"
    return BasisCertificate(
        kind=kind,
        rank=rank,
        verdict=verdict,
        invariant=invariant,
        degrees=degrees,
        degree_sum=degree_sum,
        target_degree=target_degree,
        determinant=det,
        target=target,
        failures=failures,
        floor_divides=floor,
    )


def check_derivations(G: GroupData, thetas, A: ArrangementData | None = None) -> BasisCertificate:
    """n invariant derivations form an S^G-basis iff det Coef is Q up to scalar."""
    A = A or arrangement_data(G)
    return _certify("derivations", 0, G, thetas, G.n, A.Q, A.size, "derivation")


def check_oneforms(G: GroupData, omegas, A: ArrangementData | None = None) -> BasisCertificate:
    """n invariant 1-forms form a basis iff det Coef is Q(A~) Q_det up to scalar."""
    A = A or arrangement_data(G)
    target = oneform_target(A)
    return _certify("oneforms", 1, G, omegas, G.n, target, A.oneform_target_degree(), "diff_form")


def check_mixed(G: GroupData, k: int, elements, A: ArrangementData | None = None) -> BasisCertificate:
    """n*C(n,k) invariant rank-k mixed forms against the rank-k target."""
    A = A or arrangement_data(G)
    n = G.n
    elements = list(elements)
    if k == 0 and elements and elements[0].variant == "derivation":
        return _certify("mixed", 0, G, elements, n, saito_target(A, 0), A.target_degree(0), "derivation")
    return _certify(
        "mixed", k, G, elements, n * comb(n, k), saito_target(A, k), A.target_degree(k), "diff_derivation"
    )


def as_mixed(theta: MixedForm) -> MixedForm:
    """Read a derivation as a rank-0 element of S (x) wedge V* (x) V."""
    if theta.variant == "diff_derivation":
        return theta
    if theta.variant != "derivation":
        raise ValueError("only derivations embed as rank-0 mixed forms")
    return MixedForm._raw(theta.field, theta.n, 0, "diff_derivation", dict(theta.coeffs))
