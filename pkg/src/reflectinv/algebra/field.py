"""Finite fields F_{p^k} in a power basis.

Elements are encoded as plain ints: the element sum(c_i * t^i) is stored as
sum(c_i * p^i), so 0 and 1 are the field's zero and one and, for k == 1, the
code of an element is its residue mod p.
"""
from __future__ import annotations

from functools import reduce

# Conway polynomials, coefficients ascending (constant term first).
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
}

_TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    """Invalid field parameters (composite p, reducible modulus, bad degree)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---- dense univariate helpers over F_p, lists with constant term first ----

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _upoly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    inv_lead = pow(m[-1], p - 2, p)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _upoly_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _upoly_mod(out, m, p)


def _upoly_powmod(a: list[int], e: int, m: list[int], p: int) -> list[int]:
    result, base = [1], _upoly_mod(list(a), m, p)
    while e:
        if e & 1:
            result = _upoly_mulmod(result, base, m, p)
        base = _upoly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _upoly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _upoly_mod(a, b, p)
    return a


def is_irreducible(modulus: list[int] | tuple[int, ...], p: int) -> bool:
    """Rabin's test for a monic polynomial over F_p."""
    m = _trim([c % p for c in modulus])
    k = len(m) - 1
    if k < 1 or m[-1] != 1:
        return False
    if k == 1:
        return True
    x = [0, 1]
    for r in prime_factors(k):
        h = _upoly_powmod(x, p ** (k // r), m, p)
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] -= 1
        g = _upoly_gcd(m, diff, p)
        if len(g) > 1:
            return False
    h = _upoly_powmod(x, p**k, m, p)
    h = list(h) + [0] * max(0, 2 - len(h))
    h[1] -= 1
    return not _trim([c % p for c in h])


def least_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree k over F_p.

    Order is by the coefficient list read from the constant term upward.
    """
    for n in range(p**k):
        coeffs = [(n // p**i) % p for i in range(k)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


def default_modulus(p: int, k: int) -> tuple[int, ...]:
    if (p, k) in CONWAY:
        return CONWAY[(p, k)]
    return least_irreducible(p, k)


class FiniteField:
    """The field F_q, q = p^k, with int-coded elements.

    >>> F = FiniteField(3)
    >>> F.mul(2, 2)
    1
    """

    def __init__(self, p: int, k: int = 1, modulus=None):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"characteristic {p!r} is not prime")
        if not isinstance(k, int) or k <= 0:
            raise FieldError(f"degree must be a positive integer, got {k!r}")
        self.p = p
        self.k = k
        self.q = p**k
        if modulus is None:
            modulus = default_modulus(p, k) if k > 1 else (0, 1)
        modulus = tuple(int(c) % p for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {k}")
        if k > 1 and not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over F_{p}")
        self.modulus = modulus
        self.is_prime = k == 1
        self._exp: list[int] = []
        self._log: list[int] = []
        if not self.is_prime:
            if self.q > _TABLE_LIMIT:
                raise FieldError(f"field of order {self.q} is too large")
            self._build_tables()

    # ---- construction helpers ----

    def _poly_mul_t(self, a: int) -> int:
        """Multiply the coded element by t."""
        p, k = self.p, self.k
        c = self.coords(a)
        top = c[-1]
        shifted = [0] + c[:-1]
        out = [(shifted[i] - top * self.modulus[i]) % p for i in range(k)]
        return self.from_coords(out)

    def _raw_mul(self, a: int, b: int) -> int:
        # schoolbook multiplication used only while building tables
        result = 0
        cb = self.coords(b)
        power = a
        for i in range(self.k):
            if cb[i]:
                result = self._raw_add(result, self._raw_scale(power, cb[i]))
            power = self._poly_mul_t(power)
        return result

    def _raw_add(self, a: int, b: int) -> int:
        ca, cb = self.coords(a), self.coords(b)
        return self.from_coords([(x + y) % self.p for x, y in zip(ca, cb)])

    def _raw_scale(self, a: int, s: int) -> int:
        return self.from_coords([(x * s) % self.p for x in self.coords(a)])

    def _build_tables(self) -> None:
        q = self.q
        for g in range(2, q):
            powers = [1]
            x = 1
            for _ in range(q - 2):
                x = self._raw_mul(x, g)
                powers.append(x)
            if len(set(powers)) == q - 1:
                break
        else:  # pragma: no cover - a finite field always has a primitive element
            raise FieldError("no primitive element found")
        self.primitive = g
        self._exp = powers + powers
        log = [0] * q
        for i, x in enumerate(powers):
            log[x] = i
        self._log = log
        self._add = [[self._raw_add(a, b) for b in range(q)] for a in range(q)] if q <= 256 else None
        self._neg = [self._raw_scale(a, self.p - 1) for a in range(q)]

    # ---- coordinates ----

    def coords(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(a % p)
            a //= p
        return out

    def from_coords(self, c) -> int:
        p = self.p
        value = 0
        for x in reversed(list(c)):
            value = value * p + (int(x) % p)
        return value

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime subfield."""
        return n % self.p

    @property
    def gen(self) -> int:
        """The class of t in the power basis (equals p for k > 1)."""
        return self.p if self.k > 1 else 0

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    # ---- arithmetic ----

    def add(self, a: int, b: int) -> int:
        if self.is_prime:
            return (a + b) % self.p
        if self._add is not None:
            return self._add[a][b]
        return self._raw_add(a, b)

    def neg(self, a: int) -> int:
        if self.is_prime:
            return (-a) % self.p
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.is_prime:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.is_prime:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.is_prime:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def sum(self, values) -> int:
        return reduce(self.add, values, 0)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    def primitive_element(self) -> int:
        if not self.is_prime:
            return self.primitive
        for g in range(1, self.q):
            if self.order(g) == self.q - 1:
                return g
        raise FieldError("no primitive element")  # pragma: no cover

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    # ---- display ----

    def format(self, a: int) -> str:
        """Canonical text: residue for prime fields, '(c0+c1*t+...)' otherwise."""
        if self.is_prime:
            return str(a)
        parts = []
        for i, c in enumerate(self.coords(a)):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                mono = "t" if i == 1 else f"t^{i}"
                parts.append(mono if c == 1 else f"{c}*{mono}")
        return "(" + ("+".join(parts) if parts else "0") + ")"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FiniteField)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.is_prime:
            return f"FiniteField({self.p})"
        return f"FiniteField({self.p}, {self.k}, modulus={self.modulus})"
