"""Mixed forms: elements of S (x) wedge^k V* (x) V and their relatives.

A MixedForm stores coefficients keyed by (I, j) where I is a sorted tuple of
0-based indices naming x_I = x_{i1} ^ ... ^ x_{ik} and j is the 0-based index
of v_j, or None when there is no V factor.

Variants:

* ``derivation``       S (x) V, keys ((), j)
* ``diff_form``        S (x) wedge^k V*, keys (I, None)
* ``diff_derivation``  S (x) wedge^k V* (x) V, keys (I, j)
* ``polyvector``       S (x) wedge^k V, keys (I, None) with I naming v_I
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from .algebra.field import FiniteField
from .algebra.poly import Polynomial
from .algebra.polymatrix import bareiss_det

VARIANTS = ("derivation", "diff_form", "diff_derivation", "polyvector")


class FormError(ValueError):
    """Incompatible operands for a form operation."""


@lru_cache(maxsize=None)
def colex_subsets(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """k-subsets of range(n) in colex order."""
    return tuple(sorted(combinations(range(n), k), key=lambda s: tuple(reversed(s))))


def merge_sign(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, tuple[int, ...]] | None:
    """Sign and union for x_a ^ x_b, or None when the index sets meet."""
    sa = set(a)
    if sa.intersection(b):
        return None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


def concat_sign(a, b) -> int:
    """Sign of the permutation sorting the concatenation (a, b) of sorted tuples."""
    return -1 if sum(1 for x in a for y in b if x > y) % 2 else 1


def column_keys(n: int, rank: int, variant: str) -> list[tuple]:
    """The ordered basis used for coefficient matrices."""
    if variant == "derivation":
        return [((), j) for j in range(n)]
    if variant in ("diff_form", "polyvector"):
        return [(I, None) for I in colex_subsets(n, rank)]
    if variant == "diff_derivation":
        return [(I, j) for I in colex_subsets(n, rank) for j in range(n)]
    raise FormError(f"unknown variant {variant!r}")


class MixedForm:
    """A homogeneous-in-rank element of one of the modules above."""

    __slots__ = ("field", "n", "rank", "variant", "coeffs")

    def __init__(self, field: FiniteField, n: int, rank: int, variant: str, coeffs=None):
        if variant not in VARIANTS:
            raise FormError(f"unknown variant {variant!r}")
        if variant == "derivation" and rank != 0:
            raise FormError("derivations have rank 0")
        if not 0 <= rank <= n:
            raise FormError(f"rank {rank} outside 0..{n}")
        self.field = field
        self.n = n
        self.rank = rank
        self.variant = variant
        clean = {}
        for (I, j), f in (coeffs or {}).items():
            I = tuple(I)
            if len(I) != rank or list(I) != sorted(set(I)) or any(not 0 <= i < n for i in I):
                raise FormError(f"bad index set {I} for rank {rank}")
            if (j is None) != (variant in ("diff_form", "polyvector")):
                raise FormError(f"key {(I, j)} does not fit variant {variant}")
            if j is not None and not 0 <= j < n:
                raise FormError(f"bad vector index {j}")
            if f:
                clean[(I, j)] = clean[(I, j)] + f if (I, j) in clean else f
                if not clean[(I, j)]:
                    del clean[(I, j)]
        self.coeffs: dict[tuple, Polynomial] = clean

    @classmethod
    def _raw(cls, field, n, rank, variant, coeffs) -> MixedForm:
        obj = cls.__new__(cls)
        obj.field, obj.n, obj.rank, obj.variant = field, n, rank, variant
        obj.coeffs = coeffs
        return obj

    @classmethod
    def zero(cls, field, n, rank, variant) -> MixedForm:
        return cls._raw(field, n, rank, variant, {})

    @classmethod
    def one(cls, field, n) -> MixedForm:
        """1 (x) 1 as a rank 0 differential form."""
        return cls._raw(field, n, 0, "diff_form", {((), None): Polynomial.one(field, n)})

    # ---- shape ----

    def same_module(self, other: MixedForm) -> bool:
        return (
            self.n == other.n
            and self.rank == other.rank
            and self.variant == other.variant
            and self.field == other.field
        )

    def _check(self, other: MixedForm) -> None:
        if not self.same_module(other):
            raise FormError("forms live in different modules")

    def keys(self) -> list[tuple]:
        return column_keys(self.n, self.rank, self.variant)

    def coefficient(self, I, j=None) -> Polynomial:
        return self.coeffs.get((tuple(I), j), Polynomial.zero(self.field, self.n))

    def coefficient_vector(self) -> list[Polynomial]:
        zero = Polynomial.zero(self.field, self.n)
        return [self.coeffs.get(k, zero) for k in self.keys()]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def degree(self) -> int:
        return max((f.degree() for f in self.coeffs.values()), default=-1)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all coefficients, or None if there is none."""
        degs = set()
        for f in self.coeffs.values():
            degs |= f.degrees()
            if len(degs) > 1:
                return None
        return degs.pop() if degs else None

    def is_homogeneous(self) -> bool:
        return not self.coeffs or self.homogeneous_degree() is not None

    # ---- arithmetic ----

    def __add__(self, other: MixedForm) -> MixedForm:
        self._check(other)
        out = dict(self.coeffs)
        for k, f in other.coeffs.items():
            g = out[k] + f if k in out else f
            if g:
                out[k] = g
            else:
                out.pop(k, None)
        return MixedForm._raw(self.field, self.n, self.rank, self.variant, out)

    def __neg__(self) -> MixedForm:
        return MixedForm._raw(
            self.field, self.n, self.rank, self.variant, {k: -f for k, f in self.coeffs.items()}
        )

    def __sub__(self, other: MixedForm) -> MixedForm:
        return self + (-other)

    def __mul__(self, f) -> MixedForm:
        """Multiply every coefficient by a polynomial or prime-field integer."""
        if isinstance(f, int):
            f = Polynomial.constant(self.field, self.n, self.field.from_int(f))
        if not isinstance(f, Polynomial):
            return NotImplemented
        out = {}
        if f:
            for k, g in self.coeffs.items():
                h = g * f
                if h:
                    out[k] = h
        return MixedForm._raw(self.field, self.n, self.rank, self.variant, out)

    __rmul__ = __mul__

    def scale(self, c: int) -> MixedForm:
        """Multiply by the field element with code c."""
        if c == 0:
            return MixedForm.zero(self.field, self.n, self.rank, self.variant)
        return MixedForm._raw(
            self.field, self.n, self.rank, self.variant,
            {k: f.scale(c) for k, f in self.coeffs.items()},
        )

    def exact_div(self, f: Polynomial) -> MixedForm:
        return MixedForm._raw(
            self.field, self.n, self.rank, self.variant,
            {k: g.exact_div(f) for k, g in self.coeffs.items()},
        )

    def map_coefficients(self, fn) -> MixedForm:
        out = {}
        for k, g in self.coeffs.items():
            h = fn(g)
            if h:
                out[k] = h
        return MixedForm._raw(self.field, self.n, self.rank, self.variant, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedForm):
            return NotImplemented
        return self.same_module(other) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.n, self.rank, self.variant, frozenset(self.coeffs.items())))

    # ---- scalars ----

    def leading_coefficient(self) -> int:
        """Grevlex leading coefficient of the first nonzero coordinate."""
        for k in self.keys():
            if k in self.coeffs:
                return self.coeffs[k].leading_coefficient()
        raise ValueError("zero form has no leading coefficient")

    def normalize(self) -> MixedForm:
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    def equal_up_to_scalar(self, other: MixedForm) -> bool:
        return self.same_module(other) and self.normalize() == other.normalize()

    # ---- text ----

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in self.keys():
            if k not in self.coeffs:
                continue
            I, j = k
            pieces = [f"({self.coeffs[k]})"]
            if self.variant != "derivation":
                sym = "v" if self.variant == "polyvector" else "x"
                pieces.append("^".join(f"{sym}{i + 1}" for i in I) if I else "1")
            if j is not None:
                pieces.append(f"v{j + 1}")
            parts.append(" (x) ".join(pieces))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"MixedForm[{self.variant}, rank {self.rank}]({self})"


# ---- constructors ----

def derivation(field: FiniteField, n: int, coeffs) -> MixedForm:
    """sum coeffs[j] (x) v_{j+1}."""
    return MixedForm(field, n, 0, "derivation", {((), j): f for j, f in enumerate(coeffs)})


def one_form(field: FiniteField, n: int, coeffs) -> MixedForm:
    """sum coeffs[i] (x) x_{i+1}."""
    return MixedForm(field, n, 1, "diff_form", {((i,), None): f for i, f in enumerate(coeffs)})


def euler_derivation(field: FiniteField, n: int) -> MixedForm:
    """theta_E = sum x_i (x) v_i."""
    return derivation(field, n, [Polynomial.var(field, n, i) for i in range(n)])


def euler_differential(field: FiniteField, n: int) -> MixedForm:
    """d theta_E = sum 1 (x) x_i (x) v_i."""
    one = Polynomial.one(field, n)
    return MixedForm(field, n, 1, "diff_derivation", {((i,), i): one for i in range(n)})


def constant_form(field, n, rank, variant, I=(), j=None, coeff=None) -> MixedForm:
    c = coeff if coeff is not None else Polynomial.one(field, n)
    return MixedForm(field, n, rank, variant, {(tuple(I), j): c})


# ---- products ----

def _as_wedgeable(a: MixedForm) -> str:
    if a.variant == "derivation":
        return "polyvector"
    if a.variant in ("diff_form", "polyvector"):
        return a.variant
    raise FormError(f"cannot wedge a {a.variant}")


def _coerce_vectorial(a: MixedForm) -> MixedForm:
    """Read a derivation as a rank-1 polyvector."""
    if a.variant != "derivation":
        return a
    return MixedForm._raw(a.field, a.n, 1, "polyvector", {((j,), None): f for (_, j), f in a.coeffs.items()})


def wedge(a: MixedForm, b: MixedForm) -> MixedForm:
    """Exterior product on S (x) wedge V* (or S (x) wedge V, where derivations count as rank 1)."""
    va, vb = _as_wedgeable(a), _as_wedgeable(b)
    if va != vb:
        raise FormError("wedge needs two forms or two polyvectors")
    a, b = _coerce_vectorial(a), _coerce_vectorial(b)
    if a.n != b.n:
        raise FormError("dimension mismatch")
    rank = a.rank + b.rank
    if rank > a.n:
        return MixedForm.zero(a.field, a.n, a.n, va)
    out: dict[tuple, Polynomial] = {}
    for (I, _), f in a.coeffs.items():
        for (J, _), g in b.coeffs.items():
            m = merge_sign(I, J)
            if m is None:
                continue
            s, K = m
            h = f * g
            if s < 0:
                h = -h
            key = (K, None)
            h = out[key] + h if key in out else h
            if h:
                out[key] = h
            else:
                out.pop(key, None)
    return MixedForm._raw(a.field, a.n, rank, va, out)


def wedge_all(forms, field=None, n=None) -> MixedForm:
    if not forms:
        return MixedForm.one(field, n)
    acc = forms[0]
    for f in forms[1:]:
        acc = wedge(acc, f)
    return acc


def twisted_wedge(a: MixedForm, b: MixedForm, Q: Polynomial, e: int) -> MixedForm:
    """a ^ b / Q^e when both ranks are positive, the plain product otherwise."""
    w = wedge(a, b)
    if a.rank >= 1 and b.rank >= 1:
        return w.exact_div(Q**e)
    return w


def twisted_product(forms, Q: Polynomial, e: int, field=None, n=None) -> MixedForm:
    """omega_I twisted: the wedge of k one-forms divided by Q^(e(k-1))."""
    if not forms:
        return MixedForm.one(field, n)
    w = wedge_all(list(forms))
    k = len(forms)
    return w.exact_div(Q ** (e * (k - 1))) if k > 1 else w


def mixed_mul(a: MixedForm, b: MixedForm) -> MixedForm:
    """(f (x) x_I)(f' (x) x_I' (x) v) = ff' (x) x_I ^ x_I' (x) v."""
    if a.variant != "diff_form":
        raise FormError("left factor must be a differential form")
    if b.variant not in ("derivation", "diff_derivation"):
        raise FormError("right factor must carry a V factor")
    if a.n != b.n:
        raise FormError("dimension mismatch")
    rank = a.rank + b.rank
    if rank > a.n:
        raise FormError("product rank exceeds n")
    out: dict[tuple, Polynomial] = {}
    for (I, _), f in a.coeffs.items():
        for (J, j), g in b.coeffs.items():
            m = merge_sign(I, J)
            if m is None:
                continue
            s, K = m
            h = f * g
            if s < 0:
                h = -h
            key = (K, j)
            h = out[key] + h if key in out else h
            if h:
                out[key] = h
            else:
                out.pop(key, None)
    return MixedForm._raw(a.field, a.n, rank, "diff_derivation", out)


# ---- the dualizer ----

def hodge_phi(a: MixedForm) -> MixedForm:
    """S-linear isomorphism S (x) wedge^k V -> S (x) wedge^(n-k) V*.

    v_I maps to sign * x_{I^c}, the sign being that of the permutation taking
    the concatenation (I^c, I) to (1, ..., n).  Derivations count as rank 1.
    """
    a = _coerce_vectorial(a)
    if a.variant != "polyvector":
        raise FormError("hodge_phi takes polyvectors or derivations")
    n = a.n
    out = {}
    for (I, _), f in a.coeffs.items():
        comp = tuple(i for i in range(n) if i not in I)
        s = concat_sign(comp, I)
        out[(comp, None)] = f if s > 0 else -f
    return MixedForm._raw(a.field, n, n - a.rank, "diff_form", out)


def hodge_phi_inverse(a: MixedForm, as_derivation: bool = True) -> MixedForm:
    """Inverse of hodge_phi; rank n-1 forms come back as derivations by default."""
    if a.variant != "diff_form":
        raise FormError("hodge_phi_inverse takes differential forms")
    n = a.n
    out = {}
    for (J, _), f in a.coeffs.items():
        comp = tuple(i for i in range(n) if i not in J)
        s = concat_sign(J, comp)
        out[(comp, None)] = f if s > 0 else -f
    rank = n - a.rank
    if as_derivation and rank == 1:
        return MixedForm._raw(a.field, n, 0, "derivation", {((), I[0]): f for (I, _), f in out.items()})
    return MixedForm._raw(a.field, n, rank, "polyvector", out)


# ---- coefficient matrices ----

def coef_matrix(elements) -> list[list[Polynomial]]:
    """Rows are the elements in input order, columns follow column_keys."""
    elements = list(elements)
    if not elements:
        raise FormError("no elements")
    first = elements[0]
    for e in elements[1:]:
        first._check(e)
    return [e.coefficient_vector() for e in elements]


def coef_det(elements) -> Polynomial:
    """Determinant of the coefficient matrix (fraction-free Bareiss)."""
    rows = coef_matrix(elements)
    if len(rows) != len(rows[0]):
        raise FormError(f"need {len(rows[0])} elements, got {len(rows)}")
    return bareiss_det(rows)


def elementary_symbol(I, j=None) -> str:
    """Text label like 'x1^x3 (x) v2' for a basis key (0-based input)."""
    s = "^".join(f"x{i + 1}" for i in I) if I else "1"
    return s if j is None else f"{s} (x) v{j + 1}"
