"""Finite subgroups of GL_n(F_q): closure, reflections and reflecting hyperplanes.

Convention: g acts on V = F^n by matrix multiplication on columns, so
g(v_j) = sum_i g[i][j] v_i.  On V* and on polynomials it acts by the inverse
transpose: g(x_i) = sum_k ginv[i][k] x_k, extended multiplicatively.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field as dc_field

from .algebra import linalg
from .algebra.field import FiniteField
from .algebra.linalg import Matrix
from .algebra.poly import Polynomial
from .forms import MixedForm, colex_subsets

DEFAULT_CAP = 2_000_000


class GroupError(ValueError):
    """Bad generators, or a closure that exceeds its cap."""


class CharacterError(ValueError):
    """Character values that are not multiplicative on the group."""


@dataclass
class ReflectionRecord:
    matrix: Matrix
    kind: str  # "transvection" or "diagonalizable"
    hyperplane: int  # index into GroupData.hyperplanes
    root: tuple[int, ...]  # v_s with s(v) = v + ell_H(v) v_s
    eigenvalue: int | None  # non-trivial eigenvalue, None for transvections
    order: int


@dataclass
class HyperplaneRecord:
    ell: tuple[int, ...]  # normalized: first nonzero coordinate is 1
    reflections: list[int]  # indices into GroupData.reflections
    order_GH: int
    order_KH: int
    e: int
    b: int
    delta: int
    orbit: int
    s_H: Matrix  # diagonalizable reflection of order e (identity when e == 1)
    transvection_roots: list[tuple[int, ...]]  # a basis of the root space

    def linear_form(self, field: FiniteField) -> Polynomial:
        return Polynomial.linear(field, len(self.ell), self.ell)


@dataclass
class GroupData:
    field: FiniteField
    n: int
    generators: list[Matrix]
    elements: list[Matrix]
    index: dict[Matrix, int]
    cayley: list[list[int]]  # cayley[i][g] = index of elements[i] * generators[g]
    reflections: list[ReflectionRecord] = dc_field(default_factory=list)
    hyperplanes: list[HyperplaneRecord] = dc_field(default_factory=list)
    orbits: list[list[int]] = dc_field(default_factory=list)
    cap: int = DEFAULT_CAP
    _inverses: dict = dc_field(default_factory=dict, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def p(self) -> int:
        return self.field.p

    def inverse(self, g: Matrix) -> Matrix:
        if g not in self._inverses:
            self._inverses[g] = linalg.inverse(self.field, g)
        return self._inverses[g]

    def det(self, g: Matrix) -> int:
        return linalg.det(self.field, g)

    def is_reflection_group(self) -> bool:
        """True when the reflections generate the whole group."""
        if not self.reflections:
            return self.order == 1
        sub = close_group(self.field, [r.matrix for r in self.reflections], cap=self.order, classify=False)
        return sub.order == self.order

    def fixes_single_hyperplane(self) -> bool:
        """True when every non-identity element is a reflection about one hyperplane."""
        return len(self.hyperplanes) == 1 and self.hyperplanes[0].order_GH == self.order

    def maximal_root_spaces(self) -> bool:
        return all(h.b == self.n - 1 for h in self.hyperplanes)

    def uniform_e(self) -> int | None:
        es = {h.e for h in self.hyperplanes}
        return es.pop() if len(es) == 1 else None

    def hyperplane_of(self, ell) -> int | None:
        key = normalize_vector(self.field, ell)
        for i, h in enumerate(self.hyperplanes):
            if h.ell == key:
                return i
        return None

    def conjugate(self, P: Matrix) -> GroupData:
        """The same group written in the basis given by the columns of P."""
        Pinv = linalg.inverse(self.field, P)
        F = self.field
        gens = [linalg.mat_mul(F, linalg.mat_mul(F, Pinv, g), P) for g in self.generators]
        return close_group(F, gens, cap=self.cap)


def normalize_vector(F: FiniteField, v) -> tuple[int, ...]:
    v = tuple(v)
    lead = next((c for c in v if c), None)
    if lead is None:
        raise ValueError("zero vector has no normalization")
    inv = F.inv(lead)
    return tuple(F.mul(c, inv) for c in v)


def _check_matrix(F: FiniteField, g, n: int) -> Matrix:
    m = linalg.to_matrix(g)
    if len(m) != n or any(len(r) != n for r in m):
        raise GroupError(f"generator is not {n}x{n}")
    if any(not (0 <= c < F.q) for r in m for c in r):
        raise GroupError("generator entries must be field codes")
    if linalg.det(F, m) == 0:
        raise GroupError("generator is singular")
    return m


def close_group(field: FiniteField, generators, cap: int = DEFAULT_CAP, classify: bool = True) -> GroupData:
    """Breadth-first closure of the generated group, with reflection data.

    Elements are canonical tuples of tuples, so hashing is exact.  Raises
    GroupError when more than `cap` elements appear.
    """
    gens = list(generators)
    if not gens:
        raise GroupError("need at least one generator")
    n = len(gens[0])
    gens = [_check_matrix(field, g, n) for g in gens]
    ident = linalg.identity(n)
    elements = [ident]
    index = {ident: 0}
    cayley: list[list[int]] = []
    queue = deque([0])
    F = field
    while queue:
        i = queue.popleft()
        g = elements[i]
        row = []
        for h in gens:
            prod = linalg.mat_mul(F, g, h)
            j = index.get(prod)
            if j is None:
                if len(elements) >= cap:
                    raise GroupError(f"group closure exceeded cap {cap}")
                j = len(elements)
                elements.append(prod)
                index[prod] = j
                queue.append(j)
            row.append(j)
        cayley.append(row)
    G = GroupData(field=F, n=n, generators=gens, elements=elements, index=index, cayley=cayley, cap=cap)
    if classify:
        _classify(G)
    return G


def reflection_data(F: FiniteField, g: Matrix):
    """(ell, root, eigenvalue) when rank(g - 1) == 1, else None.

    ell is normalized (first nonzero coordinate 1); g(v) = v + ell(v) * root.
    """
    n = len(g)
    d = [[F.sub(g[i][j], 1 if i == j else 0) for j in range(n)] for i in range(n)]
    if linalg.rank(F, d) != 1:
        return None
    row = next(r for r in d if any(r))
    ell = normalize_vector(F, row)
    i0 = next(i for i, c in enumerate(ell) if c)
    root = tuple(d[i][i0] for i in range(n))
    lam = F.add(1, F.sum(F.mul(a, b) for a, b in zip(ell, root)))
    return ell, root, (None if lam == 1 else lam)


def _classify(G: GroupData) -> None:
    F, n = G.field, G.n
    hyper_index: dict[tuple, int] = {}
    refl_by_h: dict[int, list[int]] = {}
    for g in G.elements:
        data = reflection_data(F, g)
        if data is None:
            continue
        ell, root, lam = data
        h = hyper_index.setdefault(ell, len(hyper_index))
        order = F.p if lam is None else F.order(lam)
        rec = ReflectionRecord(
            matrix=g,
            kind="transvection" if lam is None else "diagonalizable",
            hyperplane=h,
            root=root,
            eigenvalue=lam,
            order=order,
        )
        refl_by_h.setdefault(h, []).append(len(G.reflections))
        G.reflections.append(rec)

    ells = sorted(hyper_index, key=lambda v: tuple(reversed(v)))
    remap = {hyper_index[ell]: new for new, ell in enumerate(ells)}
    for r in G.reflections:
        r.hyperplane = remap[r.hyperplane]
    refl_by_h = {remap[h]: lst for h, lst in refl_by_h.items()}

    orbit_of = _hyperplane_orbits(G, ells)
    for h, ell in enumerate(ells):
        lst = refl_by_h[h]
        trans = [i for i in lst if G.reflections[i].kind == "transvection"]
        diag = [i for i in lst if G.reflections[i].kind == "diagonalizable"]
        order_GH = 1 + len(lst)
        order_KH = 1 + len(trans)
        e = order_GH // order_KH
        if e * order_KH != order_GH:
            raise GroupError("pointwise stabilizer order not divisible by its unipotent part")
        roots: list[tuple[int, ...]] = []
        for i in trans:
            cand = roots + [G.reflections[i].root]
            if linalg.rank(F, cand) > len(roots):
                roots = cand
        b = len(roots)
        delta = 1 if (order_GH == 2 and len(trans) == 1) else 0
        s_H = linalg.identity(n)
        if diag:
            best = max(diag, key=lambda i: (G.reflections[i].order, -i))
            s_H = G.reflections[best].matrix
            if G.reflections[best].order != e:
                raise GroupError("diagonalizable reflections do not realize e_H")
        G.hyperplanes.append(
            HyperplaneRecord(
                ell=ell,
                reflections=lst,
                order_GH=order_GH,
                order_KH=order_KH,
                e=e,
                b=b,
                delta=delta,
                orbit=orbit_of[h],
                s_H=s_H,
                transvection_roots=roots,
            )
        )
    G.orbits = []
    for h, o in enumerate(orbit_of):
        while len(G.orbits) <= o:
            G.orbits.append([])
        G.orbits[o].append(h)


def _hyperplane_orbits(G: GroupData, ells: list[tuple]) -> list[int]:
    """Orbit labels under g.H, whose linear form is ell composed with g^{-1}."""
    F = G.field
    pos = {ell: i for i, ell in enumerate(ells)}
    parent = list(range(len(ells)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in G.generators:
        ginv = G.inverse(g)
        for i, ell in enumerate(ells):
            image = normalize_vector(F, linalg.vec_mat(F, ell, ginv))
            j = pos.get(image)
            if j is None:
                raise GroupError("hyperplane set is not stable under the group")
            a, b = find(i), find(j)
            if a != b:
                parent[max(a, b)] = min(a, b)
    labels: dict[int, int] = {}
    out = []
    for i in range(len(ells)):
        r = find(i)
        labels.setdefault(r, len(labels))
        out.append(labels[r])
    return out


# ---- action ----

class _ActionCache:
    """Images of x_i, of x_I (minors of g^{-1}) and of v_I (minors of g)."""

    def __init__(self, F: FiniteField, g: Matrix):
        self.F = F
        self.g = g
        self.ginv = linalg.inverse(F, g)
        n = len(g)
        self.n = n
        self.x_images = [Polynomial.linear(F, n, self.ginv[i]) for i in range(n)]
        self._wedge: dict[tuple, list] = {}
        self._vwedge: dict[tuple, list] = {}

    def x_wedge(self, I):
        """g(x_I) as a list of (J, coefficient)."""
        if I not in self._wedge:
            F, m = self.F, self.ginv
            out = []
            for J in colex_subsets(self.n, len(I)):
                c = linalg.minor_det(F, m, I, J) if I else 1
                if c:
                    out.append((J, c))
            self._wedge[I] = out
        return self._wedge[I]

    def v_wedge(self, I):
        """g(v_I) as a list of (J, coefficient)."""
        if I not in self._vwedge:
            F, m = self.F, self.g
            out = []
            for J in colex_subsets(self.n, len(I)):
                c = linalg.minor_det(F, m, J, I) if I else 1
                if c:
                    out.append((J, c))
            self._vwedge[I] = out
        return self._vwedge[I]


def act(g: Matrix, x, field: FiniteField | None = None, _cache: _ActionCache | None = None):
    """Apply g to a Polynomial or a MixedForm."""
    F = field or x.field
    cache = _cache or _ActionCache(F, linalg.to_matrix(g))
    if isinstance(x, Polynomial):
        return x.substitute(cache.x_images)
    if not isinstance(x, MixedForm):
        raise TypeError(f"cannot act on {type(x).__name__}")
    n = x.n
    acc: dict[tuple, Polynomial] = {}
    for (I, j), f in x.coeffs.items():
        gf = f.substitute(cache.x_images)
        if x.variant == "polyvector":
            targets = [((J, None), c) for J, c in cache.v_wedge(I)]
        else:
            xs = cache.x_wedge(I)
            if j is None:
                targets = [((J, None), c) for J, c in xs]
            else:
                targets = [((J, i), F.mul(c, cache.g[i][j])) for J, c in xs for i in range(n) if cache.g[i][j]]
        for key, c in targets:
            if not c:
                continue
            term = gf.scale(c)
            acc[key] = acc[key] + term if key in acc else term
    out = {k: v for k, v in acc.items() if v}
    return MixedForm._raw(F, n, x.rank, x.variant, out)


def character_values(G: GroupData, chi) -> list[int]:
    """Values of a linear character on every element, from its generator values.

    Raises CharacterError when the assignment is inconsistent on some relation
    met along the Cayley graph.
    """
    F = G.field
    chi = list(chi)
    if len(chi) != len(G.generators):
        raise CharacterError("need one character value per generator")
    if any(c == 0 for c in chi):
        raise CharacterError("character values must be nonzero")
    values: list[int | None] = [None] * G.order
    values[0] = 1
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for gi, j in enumerate(G.cayley[i]):
            v = F.mul(values[i], chi[gi])
            if values[j] is None:
                values[j] = v
                queue.append(j)
            elif values[j] != v:
                raise CharacterError("character is not multiplicative on the group")
    return values  # type: ignore[return-value]


def det_character(G: GroupData, power: int = 1) -> list[int]:
    """Generator values of det^power."""
    F = G.field
    return [F.pow(G.det(g), power) for g in G.generators]


def is_semi_invariant(G: GroupData, chi, x) -> bool:
    """g(x) == chi(g) x for every generator (chi given on generators)."""
    character_values(G, chi)
    F = G.field
    for g, c in zip(G.generators, chi):
        gx = act(g, x, F)
        target = x.scale(c) if c != 1 else x
        if gx != target:
            return False
    return True


def is_invariant(G: GroupData, x) -> bool:
    F = G.field
    return all(act(g, x, F) == x for g in G.generators)


def pointwise_stabilizer(G: GroupData, h: int) -> list[Matrix]:
    """G_H computed directly: elements fixing every vector of H."""
    F, n = G.field, G.n
    ell = G.hyperplanes[h].ell
    # a basis of H = ker ell
    Hbasis = linalg.nullspace(F, [list(ell)], n)
    out = []
    for g in G.elements:
        if all(linalg.mat_vec(F, g, v) == tuple(v) for v in Hbasis):
            out.append(g)
    return out


