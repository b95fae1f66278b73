"""Brute-force invariants: exact nullspaces of (g - 1) on graded pieces.

This is the independent route used to check every construction.  It only
uses the group action on monomials, wedge monomials and V, never the
determinant machinery.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, prod

from .algebra import linalg
from .algebra.poly import Polynomial, monomials
from .forms import MixedForm, colex_subsets
from .group import GroupData, _ActionCache

SOLVER_CAP = 20000
MODULES = ("mixed", "forms", "derivations", "invariants")


class OracleError(ValueError):
    """The graded piece is too large for the exact solver."""


def _keys(n: int, k: int, module: str) -> list[tuple]:
    if module == "mixed":
        return [(I, j) for I in colex_subsets(n, k) for j in range(n)]
    if module == "forms":
        return [(I, None) for I in colex_subsets(n, k)]
    if module == "derivations":
        return [((), j) for j in range(n)]
    if module == "invariants":
        return [((), None)]
    raise ValueError(f"unknown module {module!r}")


def piece_dimension(n: int, d: int, k: int, module: str) -> int:
    return comb(n + d - 1, d) * len(_keys(n, k, module))


def _monomial_images(cache: _ActionCache, monos: list[tuple[int, ...]]):
    """g(x^a) for every monomial of one degree, built up variable by variable."""
    F, n = cache.F, cache.n
    memo: dict[tuple[int, ...], Polynomial] = {tuple([0] * n): Polynomial.one(F, n)}

    def image(a):
        if a not in memo:
            i = next(i for i, e in enumerate(a) if e)
            b = list(a)
            b[i] -= 1
            memo[a] = image(tuple(b)) * cache.x_images[i]
        return memo[a]

    return {a: image(a) for a in monos}


def _action_columns(G: GroupData, g, d: int, k: int, module: str, basis, position):
    """Images of each basis element as {position: coefficient} dicts."""
    F, n = G.field, G.n
    cache = _ActionCache(F, g)
    images = _monomial_images(cache, sorted({b[0] for b in basis}))
    cols = []
    for mono, (I, j) in basis:
        img = images[mono]
        xs = cache.x_wedge(I) if module in ("mixed", "forms") else [((), 1)]
        if j is None:
            vs = [(None, 1)]
        else:
            vs = [(i, cache.g[i][j]) for i in range(n) if cache.g[i][j]]
        col: dict[int, int] = {}
        for a, c1 in img.terms.items():
            for J, c2 in xs:
                c12 = F.mul(c1, c2)
                for i, c3 in vs:
                    pos = position[(a, (J, i))]
                    col[pos] = F.add(col.get(pos, 0), F.mul(c12, c3))
        cols.append(col)
    return cols


def _nullspace(F, rows, ncols):
    if F.is_prime:
        return linalg.nullspace_mod_p(rows, F.p, ncols)
    return linalg.nullspace(F, rows, ncols)


def invariant_vectors(G: GroupData, d: int, k: int, module: str):
    """Basis of the invariant subspace of one graded piece, as coordinate vectors."""
    n, F = G.n, G.field
    keys = _keys(n, k, module)
    monos = monomials(n, d)
    basis = [(a, key) for a in monos for key in keys]
    N = len(basis)
    if N > SOLVER_CAP:
        raise OracleError(f"graded piece of dimension {N} exceeds the solver cap {SOLVER_CAP}")
    position = {b: i for i, b in enumerate(basis)}
    rows: list[list[int]] = []
    for g in G.generators:
        cols = _action_columns(G, g, d, k, module, basis, position)
        mat = [[0] * N for _ in range(N)]
        for c, col in enumerate(cols):
            for r, v in col.items():
                mat[r][c] = v
        for i in range(N):
            mat[i][i] = F.sub(mat[i][i], 1)
        rows.extend(r for r in mat if any(r))
    return basis, _nullspace(F, rows, N)


def graded_invariants(G: GroupData, d: int, k: int = 0, module: str = "mixed"):
    """Basis of the degree-d, rank-k invariants.

    Returns MixedForms (or Polynomials for module='invariants').
    """
    F, n = G.field, G.n
    basis, vecs = invariant_vectors(G, d, k, module)
    out = []
    for v in vecs:
        coeffs: dict[tuple, dict] = {}
        for (a, key), c in zip(basis, v):
            if c:
                coeffs.setdefault(key, {})[a] = c
        polys = {key: Polynomial(F, n, t) for key, t in coeffs.items()}
        if module == "invariants":
            out.append(polys.get(((), None), Polynomial.zero(F, n)))
        elif module == "mixed":
            out.append(MixedForm(F, n, k, "diff_derivation", polys))
        elif module == "forms":
            out.append(MixedForm(F, n, k, "diff_form", polys))
        else:
            out.append(MixedForm(F, n, 0, "derivation", polys))
    return out


def graded_dimension(G: GroupData, d: int, k: int = 0, module: str = "mixed") -> int:
    return len(invariant_vectors(G, d, k, module)[1])


def dimension_table(G: GroupData, dmax: int, module: str = "mixed") -> dict[int, list[int]]:
    ranks = [0] if module in ("derivations", "invariants") else range(G.n + 1)
    return {k: [graded_dimension(G, d, k, module) for d in range(dmax + 1)] for k in ranks}


def infer_sgc_degrees(G: GroupData, dmax: int = 60) -> list[int]:
    """Degrees of basic invariants, read off the oracle dimensions of S^G.

    Assumes S^G is polynomial and stops once the product of degrees is |G|.
    """
    from .construct.hilbert import invariant_series

    degrees: list[int] = []
    dims: list[int] = []
    for d in range(dmax + 1):
        dims.append(graded_dimension(G, d, 0, "invariants"))
        predicted = invariant_series(degrees, d)
        extra = dims[d] - predicted[d]
        if extra < 0:
            raise OracleError("invariant dimensions are not those of a polynomial ring")
        degrees.extend([d] * extra)
        if len(degrees) >= G.n:
            if prod(degrees) == G.order and len(degrees) == G.n:
                return degrees
            raise OracleError("invariant ring does not look polynomial")
    raise OracleError(f"basic invariant degrees not found up to degree {dmax}")


@dataclass
class HilbertComparison:
    module: str
    dmax: int
    closed_form: dict[int, list[int]]
    oracle: dict[int, list[int]]
    discrepancies: list[tuple[int, int, int, int]] = field(default_factory=list)  # (k, d, closed, oracle)

    @property
    def agrees(self) -> bool:
        return not self.discrepancies


def hilbert_compare(G: GroupData, ledger, dmax: int, module: str = "mixed") -> HilbertComparison:
    from .construct.hilbert import hilbert_series

    closed = hilbert_series(ledger, dmax, module)
    oracle = dimension_table(G, dmax, module)
    bad = []
    for k in oracle:
        for d in range(dmax + 1):
            a, b = closed.get(k, [0] * (dmax + 1))[d], oracle[k][d]
            if a != b:
                bad.append((k, d, a, b))
    return HilbertComparison(module, dmax, closed, oracle, bad)


# ---- divisibility audit in convenient coordinates ----

CLAUSES = ("a", "b", "c", "d", "e", "f")


@dataclass
class AuditReport:
    dmax: int
    ranks: list[int]
    b: int
    e: int
    delta: int
    checked: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CLAUSES})
    passed: dict[str, int] = field(default_factory=lambda: {c: 0 for c in CLAUSES})
    failures: list[tuple] = field(default_factory=list)
    exemption_witnesses: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and all(self.checked[c] == self.passed[c] for c in CLAUSES)

    def to_json(self) -> dict:
        return {
            "dmax": self.dmax,
            "ranks": self.ranks,
            "b": self.b,
            "e": self.e,
            "delta": self.delta,
            "checked": self.checked,
            "passed": self.passed,
            "failures": [list(map(str, f)) for f in self.failures],
            "exemption_witnesses": [list(map(str, w)) for w in self.exemption_witnesses],
            "ok": self.ok,
        }


def _xn_order(f: Polynomial, n: int) -> float:
    """Exponent of x_n dividing f (infinite for 0)."""
    if f.is_zero():
        return float("inf")
    return min(a[n - 1] for a in f.terms)


def _sorting_sign(seq) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def audit_form(eta: MixedForm, b: int, e: int, delta: int, report: AuditReport, tag=None) -> None:
    """Evaluate clauses a)-f) on one invariant in convenient coordinates."""
    n = eta.n
    N = n - 1  # 0-based index of the special coordinate
    bset = set(range(b))

    def f(I, j):
        return eta.coefficient(I, j)

    def record(clause, ok, detail):
        report.checked[clause] += 1
        if ok:
            report.passed[clause] += 1
        else:
            report.failures.append((clause, tag, detail))

    for I in colex_subsets(n, eta.rank):
        meet = bset.intersection(I)
        if N not in I:
            record("a", _xn_order(f(I, N), n) >= 1, (I, N))
            if meet:
                v = _xn_order(f(I, N), n)
                if delta == 1:
                    if v < 2:
                        report.exemption_witnesses.append((tag, I, str(f(I, N))))
                else:
                    record("f", v >= e + 1, (I, N))
        else:
            if meet:
                record("b", _xn_order(f(I, N), n) >= e, (I, N))
            for j in range(N):
                record("c", _xn_order(f(I, j), n) >= e - 1, (I, j))
        if N not in I and meet:
            for j in range(N):
                if meet != {j}:
                    record("d", _xn_order(f(I, j), n) >= e, (I, j))
            if len(meet) == 1:
                m = next(iter(meet))
                sigma = [N if i == m else i for i in I]
                eps = _sorting_sign(sigma)
                other = f(tuple(sorted(sigma)), N)
                diff = f(I, m) - other if eps > 0 else f(I, m) + other
                record("e", _xn_order(diff, n) >= e, (I, m))


def appendix_audit(G: GroupData, dmax: int, ranks=None) -> AuditReport:
    """Check clauses a)-f) on the oracle bases of a one-hyperplane group."""
    from .construct.one_hyperplane import convenient_basis, to_convenient

    cb = convenient_basis(G)
    ranks = list(range(G.n + 1)) if ranks is None else list(ranks)
    report = AuditReport(dmax=dmax, ranks=ranks, b=cb.b, e=cb.e, delta=cb.delta)
    for k in ranks:
        for d in range(dmax + 1):
            for idx, eta in enumerate(graded_invariants(G, d, k, "mixed")):
                audit_form(to_convenient(eta, cb), cb.b, cb.e, cb.delta, report, tag=(d, k, idx))
    return report


def audit_element(G: GroupData, eta: MixedForm, dmax: int | None = None) -> AuditReport:
    """Audit one invariant mixed form given in the original coordinates."""
    from .construct.one_hyperplane import convenient_basis, to_convenient
    from .group import is_invariant

    if not is_invariant(G, eta):
        raise ValueError("element is not invariant")
    cb = convenient_basis(G)
    report = AuditReport(dmax=dmax if dmax is not None else -1, ranks=[eta.rank], b=cb.b, e=cb.e, delta=cb.delta)
    audit_form(to_convenient(eta, cb), cb.b, cb.e, cb.delta, report, tag="input")
    return report
