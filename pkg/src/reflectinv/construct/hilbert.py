"""Closed-form bigraded Hilbert series from an exponent ledger.

Series are dicts {k: [c_0, ..., c_dmax]} giving dimensions by rank k and
polynomial degree d.  Numerators are Laurent polynomials in q and t kept as
{(q_exp, t_exp): int}; negative q exponents must cancel before expansion.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..forms import MixedForm


@dataclass
class ExponentLedger:
    m_star: list[int]  # degrees of the basic derivations
    m: list[int]  # degrees of the dual 1-forms (same order)
    coxeter: int  # e|A|
    sgc_degrees: list[int]  # degrees of basic invariants of S^G
    arrangement_size: int
    structure: str = "generic"  # or "char2" for the n=2, G_H = {1, t} case

    def duality_holds(self) -> bool:
        return all(a + b == self.coxeter for a, b in zip(self.m, self.m_star))


def ledger_from_bases(thetas: list[MixedForm], omegas: list[MixedForm], coxeter: int,
                      sgc_degrees, arrangement_size: int, structure: str = "generic") -> ExponentLedger:
    return ExponentLedger(
        m_star=[t.homogeneous_degree() for t in thetas],
        m=[w.homogeneous_degree() for w in omegas],
        coxeter=coxeter,
        sgc_degrees=list(sgc_degrees),
        arrangement_size=arrangement_size,
        structure=structure,
    )


Laurent = dict


def _add(acc: Laurent, key, c: int) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def _mul(a: Laurent, b: Laurent) -> Laurent:
    out: Laurent = {}
    for (qa, ta), ca in a.items():
        for (qb, tb), cb in b.items():
            _add(out, (qa + qb, ta + tb), ca * cb)
    return out


def _sum(*parts: Laurent) -> Laurent:
    out: Laurent = {}
    for p in parts:
        for k, c in p.items():
            _add(out, k, c)
    return out


def _scale(a: Laurent, c: int) -> Laurent:
    return {k: v * c for k, v in a.items() if v * c}


def _prod_one_plus(exponents, h: int) -> Laurent:
    """q^h * prod(1 + q^(e_i) t), expanded over subsets."""
    out: Laurent = {}
    for size in range(len(exponents) + 1):
        for S in combinations(exponents, size):
            _add(out, (h + sum(S), size), 1)
    return out


def mixed_numerator(ledger: ExponentLedger) -> Laurent:
    """Numerator over prod(1 - q^d_i) for S (x) wedge V* (x) V."""
    h = ledger.coxeter
    if ledger.structure == "char2":
        # theta1/omega2 have degree |A|-1, theta2/omega1 degree 1
        A = ledger.arrangement_size
        (s1, s2), (m1, m2) = ledger.m_star, ledger.m
        out: Laurent = {}
        for s in (s1, s2):
            _add(out, (s, 0), 1)
            _add(out, (s + m1, 1), 1)
            _add(out, (s + m1 + m2 - A, 2), 1)
        _add(out, (0, 1), 1)
        _add(out, (m2 + s1 - A, 1), 1)
        return out
    sum_star: Laurent = {}
    for s in ledger.m_star:
        _add(sum_star, (s, 0), 1)
    inner = _sum({(0, 0): 1, (h, 0): -1}, _prod_one_plus([-s for s in ledger.m_star], h))
    return _sum({(0, 1): 1, (h, 1): -1}, _mul(sum_star, inner))


def forms_numerator(ledger: ExponentLedger) -> Laurent:
    """Numerator over prod(1 - q^d_i) for S (x) wedge V*."""
    h = ledger.coxeter
    return _sum({(0, 0): 1, (h, 0): -1}, _prod_one_plus([m - h for m in ledger.m], h))


def invariant_series(sgc_degrees, dmax: int) -> list[int]:
    """Coefficients of 1 / prod(1 - q^d_i) up to q^dmax."""
    coeffs = [1] + [0] * dmax
    for d in sgc_degrees:
        if d <= 0:
            raise ValueError("invariant degrees must be positive")
        for i in range(d, dmax + 1):
            coeffs[i] += coeffs[i - d]
    return coeffs


def expand(numerator: Laurent, sgc_degrees, dmax: int, n: int) -> dict[int, list[int]]:
    if any(qe < 0 for (qe, _), c in numerator.items() if c):
        raise ValueError("negative powers of q did not cancel")
    base = invariant_series(sgc_degrees, dmax)
    out = {k: [0] * (dmax + 1) for k in range(n + 1)}
    for (qe, te), c in numerator.items():
        if te > n:
            if c:
                raise ValueError("numerator has a t-power above n")
            continue
        for d in range(qe, dmax + 1):
            out[te][d] += c * base[d - qe]
    return out


def hilbert_series(ledger: ExponentLedger, dmax: int, module: str = "mixed") -> dict[int, list[int]]:
    """Closed-form dimensions by (rank, degree) for 'mixed', 'forms' or 'invariants'."""
    n = len(ledger.m_star)
    if module == "mixed":
        return expand(mixed_numerator(ledger), ledger.sgc_degrees, dmax, n)
    if module == "forms":
        return expand(forms_numerator(ledger), ledger.sgc_degrees, dmax, n)
    if module == "invariants":
        return {0: invariant_series(ledger.sgc_degrees, dmax)}
    raise ValueError(f"unknown module {module!r}")


def series_from_basis(degrees: dict[int, list[int]], sgc_degrees, dmax: int) -> dict[int, list[int]]:
    """Series of a free S^G-module with homogeneous basis of the given degrees."""
    num: Laurent = {}
    for k, ds in degrees.items():
        for d in ds:
            _add(num, (d, k), 1)
    n = max(degrees)
    return expand(num, sgc_degrees, dmax, n)
