"""Sparse multivariate polynomials over a FiniteField.

Terms are kept in a dict from a packed exponent vector to a nonzero field
code.  Each variable gets a fixed 16-bit slot with x1 in the most significant
slot, so adding packed keys multiplies monomials and comparing keys is lex
order.  The display and normalization order is graded reverse lex.
"""
from __future__ import annotations

import heapq
import re
from itertools import combinations_with_replacement

from .field import FiniteField

SHIFT = 16
MASK = (1 << SHIFT) - 1
MAX_EXPONENT = MASK


class InexactDivisionError(ArithmeticError):
    """Raised when an exact division leaves a nonzero remainder."""


class ZeroValuationError(ValueError):
    """The valuation of the zero polynomial is infinite."""


def pack(exps, n: int) -> int:
    key = 0
    for e in exps:
        if e < 0 or e > MAX_EXPONENT:
            raise ValueError(f"exponent {e} out of range")
        key = (key << SHIFT) | e
    return key


def unpack(key: int, n: int) -> tuple[int, ...]:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        out[i] = key & MASK
        key >>= SHIFT
    return tuple(out)


def grevlex_key(exps: tuple[int, ...]):
    """Sort key; larger means earlier in graded reverse lex order."""
    return (sum(exps), tuple(-e for e in reversed(exps)))


class Polynomial:
    """Element of F[x1..xn].

    Instances are treated as immutable.  Integers in arithmetic are read as
    elements of the prime subfield.
    """

    __slots__ = ("field", "n", "_t", "_deg")

    def __init__(self, field: FiniteField, n: int, terms=None):
        self.field = field
        self.n = n
        t: dict[int, int] = {}
        if terms:
            F = field
            for exps, c in terms.items():
                if len(exps) != n:
                    raise ValueError(f"exponent vector {exps} has wrong length for n={n}")
                c = F.from_int(c) if F.is_prime else c
                if c:
                    k = pack(exps, n)
                    t[k] = F.add(t.get(k, 0), c) if k in t else c
                    if not t[k]:
                        del t[k]
        self._t = t
        self._deg = None

    @classmethod
    def _raw(cls, field: FiniteField, n: int, t: dict[int, int]) -> Polynomial:
        obj = cls.__new__(cls)
        obj.field = field
        obj.n = n
        obj._t = t
        obj._deg = None
        return obj

    # ---- constructors ----

    @classmethod
    def zero(cls, field, n) -> Polynomial:
        return cls._raw(field, n, {})

    @classmethod
    def constant(cls, field, n, c: int) -> Polynomial:
        return cls._raw(field, n, {0: c} if c else {})

    @classmethod
    def one(cls, field, n) -> Polynomial:
        return cls.constant(field, n, 1)

    @classmethod
    def var(cls, field, n, i: int) -> Polynomial:
        """The variable x_{i+1} (0-based index i)."""
        return cls._raw(field, n, {1 << (SHIFT * (n - 1 - i)): 1})

    @classmethod
    def monomial(cls, field, n, exps, c: int = 1) -> Polynomial:
        return cls._raw(field, n, {pack(exps, n): c} if c else {})

    @classmethod
    def linear(cls, field, n, coeffs) -> Polynomial:
        """sum(coeffs[i] * x_{i+1}) with field-coded coefficients."""
        t = {}
        for i, c in enumerate(coeffs):
            if c:
                t[1 << (SHIFT * (n - 1 - i))] = c
        return cls._raw(field, n, t)

    # ---- inspection ----

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        n = self.n
        return {unpack(k, n): c for k, c in self._t.items()}

    def coefficient(self, exps) -> int:
        return self._t.get(pack(exps, self.n), 0)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def _key_degree(self, k: int) -> int:
        d = 0
        while k:
            d += k & MASK
            k >>= SHIFT
        return d

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if self._deg is None:
            self._deg = max((self._key_degree(k) for k in self._t), default=-1)
        return self._deg

    def degrees(self) -> set[int]:
        return {self._key_degree(k) for k in self._t}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def leading_term(self) -> tuple[tuple[int, ...], int]:
        """(exponents, coefficient) of the grevlex-leading term."""
        if not self._t:
            raise ValueError("zero polynomial has no leading term")
        exps = max((unpack(k, self.n) for k in self._t), key=grevlex_key)
        return exps, self._t[pack(exps, self.n)]

    def leading_coefficient(self) -> int:
        return self.leading_term()[1]

    def normalize(self) -> Polynomial:
        """Scalar multiple with grevlex leading coefficient 1 (zero stays zero)."""
        if not self._t:
            return self
        return self.scale(self.field.inv(self.leading_coefficient()))

    def equal_up_to_scalar(self, other: Polynomial) -> bool:
        return self.normalize() == other.normalize()

    def ratio_to(self, other: Polynomial) -> int | None:
        """The scalar c with self == c * other, or None."""
        if other.is_zero():
            return 1 if self.is_zero() else None
        if self.is_zero():
            return None
        k = next(iter(other._t))
        if k not in self._t:
            return None
        c = self.field.div(self._t[k], other._t[k])
        return c if self == other.scale(c) else None

    # ---- arithmetic ----

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.n != self.n or (other.field is not self.field and other.field != self.field):
                raise ValueError("polynomials live in different rings")
            return other
        if isinstance(other, int):
            return Polynomial.constant(self.field, self.n, self.field.from_int(other))
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        if len(other._t) > len(self._t):
            big, small = other._t, self._t
        else:
            big, small = self._t, other._t
        t = dict(big)
        if F.is_prime:
            p = F.p
            for k, c in small.items():
                v = (t.get(k, 0) + c) % p
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        else:
            for k, c in small.items():
                v = F.add(t.get(k, 0), c)
                if v:
                    t[k] = v
                else:
                    t.pop(k, None)
        return Polynomial._raw(F, self.n, t)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        F = self.field
        return Polynomial._raw(F, self.n, {k: F.neg(c) for k, c in self._t.items()})

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def scale(self, c: int) -> Polynomial:
        """Multiply by the field element with code c."""
        F = self.field
        if c == 0:
            return Polynomial.zero(F, self.n)
        if c == 1:
            return self
        t = {k: F.mul(v, c) for k, v in self._t.items()}
        return Polynomial._raw(F, self.n, t)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field
        a, b = self._t, other._t
        if not a or not b:
            return Polynomial.zero(F, self.n)
        if self.degree() + other.degree() > MAX_EXPONENT:
            raise OverflowError("product degree exceeds the exponent range")
        if len(a) < len(b):
            a, b = b, a
        out: dict[int, int] = {}
        get = out.get
        if F.is_prime:
            p = F.p
            if len(b) == 1:
                (kb, cb), = b.items()
                return Polynomial._raw(F, self.n, {ka + kb: ca * cb % p for ka, ca in a.items()})
            for kb, cb in b.items():
                for ka, ca in a.items():
                    k = ka + kb
                    out[k] = get(k, 0) + ca * cb
            t = {}
            for k, v in out.items():
                v %= p
                if v:
                    t[k] = v
            return Polynomial._raw(F, self.n, t)
        add, mul = F.add, F.mul
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = add(get(k, 0), mul(ca, cb))
        return Polynomial._raw(F, self.n, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> Polynomial:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.one(self.field, self.n)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.constant(self.field, self.n, self.field.from_int(other))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self.field == other.field and self._t == other._t

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._t.items())))

    # ---- division ----

    def _key_ge(self, k: int, lead: int) -> bool:
        for _ in range(self.n):
            if (k & MASK) < (lead & MASK):
                return False
            k >>= SHIFT
            lead >>= SHIFT
        return True

    def divmod_exact(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Quotient and remainder of multivariate division by a single divisor.

        Uses lex order on packed keys; the remainder is zero exactly when
        `other` divides `self`.
        """
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        F = self.field
        b = other._t
        lb = max(b)
        inv_lb = F.inv(b[lb])
        rem = dict(self._t)
        quot: dict[int, int] = {}
        remainder: dict[int, int] = {}
        heap = [-k for k in rem]
        heapq.heapify(heap)
        seen = set(rem)
        prime = F.is_prime
        p = F.p
        b_items = list(b.items())
        while heap:
            k = -heapq.heappop(heap)
            c = rem.pop(k, 0)
            if not c:
                continue
            if not self._key_ge(k, lb):
                remainder[k] = c
                continue
            t = k - lb
            qc = c * inv_lb % p if prime else F.mul(c, inv_lb)
            quot[t] = qc
            for kb, cb in b_items:
                if kb == lb:
                    continue
                key = t + kb
                if prime:
                    v = (rem.get(key, 0) - qc * cb) % p
                else:
                    v = F.sub(rem.get(key, 0), F.mul(qc, cb))
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
                if key not in seen:
                    seen.add(key)
                    heapq.heappush(heap, -key)
        return Polynomial._raw(F, self.n, quot), Polynomial._raw(F, self.n, remainder)

    def exact_div(self, other) -> Polynomial:
        """self / other, raising InexactDivisionError on a nonzero remainder."""
        other = self._coerce(other)
        if len(other._t) == 1 and 0 in other._t:
            return self.scale(self.field.inv(other._t[0]))
        q, r = self.divmod_exact(other)
        if r:
            raise InexactDivisionError(f"{other} does not divide {self}")
        return q

    def divides(self, other: Polynomial) -> bool:
        """True when self divides other (the zero polynomial divides only 0)."""
        if self.is_zero():
            return other.is_zero()
        return not other.divmod_exact(self)[1]

    def valuation(self, ell: Polynomial) -> int:
        """Largest m with ell^m dividing self."""
        if self.is_zero():
            raise ZeroValuationError("valuation of the zero polynomial")
        if ell.is_constant():
            raise ValueError("valuation along a constant")
        m, f = 0, self
        while True:
            q, r = f.divmod_exact(ell)
            if r:
                return m
            m, f = m + 1, q

    # ---- calculus and substitution ----

    def partial(self, i: int) -> Polynomial:
        """Derivative in x_{i+1}; exponents divisible by p drop out."""
        F = self.field
        shift = SHIFT * (self.n - 1 - i)
        unit = 1 << shift
        t = {}
        for k, c in self._t.items():
            e = (k >> shift) & MASK
            if e == 0:
                continue
            v = F.mul(c, F.from_int(e))
            if v:
                t[k - unit] = v
        return Polynomial._raw(F, self.n, t)

    def substitute(self, images: list[Polynomial]) -> Polynomial:
        """f(images[0], ..., images[n-1])."""
        F = self.field
        n = self.n
        target_n = images[0].n if images else n
        one = Polynomial.one(F, target_n)
        cache: list[dict[int, Polynomial]] = [{0: one, 1: img} for img in images]

        def power(i: int, e: int) -> Polynomial:
            c = cache[i]
            if e not in c:
                half = power(i, e // 2)
                c[e] = half * half if e % 2 == 0 else half * half * images[i]
            return c[e]

        acc: dict[int, int] = {}
        for k, c in self._t.items():
            exps = unpack(k, n)
            term = None
            for i, e in enumerate(exps):
                if e:
                    pw = power(i, e)
                    term = pw if term is None else term * pw
            if term is None:
                term = one
            for kk, cc in term._t.items():
                acc[kk] = F.add(acc.get(kk, 0), F.mul(cc, c))
        return Polynomial._raw(F, target_n, {k: v for k, v in acc.items() if v})

    def evaluate(self, point) -> int:
        F = self.field
        value = 0
        for exps, c in self.terms.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = F.mul(term, F.pow(x, e))
            value = F.add(value, term)
        return value

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial._raw(
            self.field, self.n, {k: c for k, c in self._t.items() if self._key_degree(k) == d}
        )

    # ---- text ----

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        items = [(unpack(k, self.n), c) for k, c in self._t.items()]
        items.sort(key=lambda t: grevlex_key(t[0]), reverse=True)
        return items

    def __str__(self) -> str:
        if not self._t:
            return "0"
        F = self.field
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            if c != 1 or not any(exps):
                factors.append(F.format(c))
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(f"x{i + 1}")
                elif e > 1:
                    factors.append(f"x{i + 1}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    @classmethod
    def parse(cls, text: str, field: FiniteField, n: int) -> Polynomial:
        return _Parser(text, field, n).parse()


def monomials(n: int, d: int) -> list[tuple[int, ...]]:
    """Exponent vectors of degree d in n variables, grevlex descending."""
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=grevlex_key, reverse=True)
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(t)|([-+*^()]))")


class _Parser:
    """Recursive descent for sums/products/powers of ints, x<i>, t and parens."""

    def __init__(self, text: str, field: FiniteField, n: int):
        self.field, self.n = field, n
        self.tokens = []
        pos = 0
        text = text.strip()
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
            self.tokens.append(m.groups())
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self, sym=None):
        tok = self.peek()
        if tok is None or (sym is not None and tok[3] != sym):
            raise ValueError(f"expected {sym!r} in polynomial text")
        self.i += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise ValueError("empty polynomial text")
        value = self.expr()
        if self.peek() is not None:
            raise ValueError("trailing characters in polynomial text")
        return value

    def expr(self) -> Polynomial:
        sign = 1
        tok = self.peek()
        if tok and tok[3] in ("+", "-"):
            self.take()
            sign = -1 if tok[3] == "-" else 1
        value = self.term()
        if sign < 0:
            value = -value
        while (tok := self.peek()) and tok[3] in ("+", "-"):
            self.take()
            rhs = self.term()
            value = value + rhs if tok[3] == "+" else value - rhs
        return value

    def term(self) -> Polynomial:
        value = self.power()
        while (tok := self.peek()) and tok[3] == "*":
            self.take()
            value = value * self.power()
        return value

    def power(self) -> Polynomial:
        base = self.atom()
        if (tok := self.peek()) and tok[3] == "^":
            self.take()
            num = self.take()
            if num[0] is None:
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** int(num[0])
        return base

    def atom(self) -> Polynomial:
        F, n = self.field, self.n
        tok = self.take()
        num, var, t, sym = tok
        if num is not None:
            return Polynomial.constant(F, n, F.from_int(int(num)))
        if var is not None:
            i = int(var)
            if not 1 <= i <= n:
                raise ValueError(f"variable x{i} out of range for n={n}")
            return Polynomial.var(F, n, i - 1)
        if t is not None:
            if F.is_prime:
                raise ValueError("'t' only denotes the generator of an extension field")
            return Polynomial.constant(F, n, F.gen)
        if sym == "(":
            value = self.expr()
            self.take(")")
            return value
        if sym == "-":
            return -self.power()
        raise ValueError(f"unexpected {sym!r} in polynomial text")
