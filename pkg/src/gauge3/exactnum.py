"""Exact cyclotomic arithmetic.

Elements of Q(zeta_n) are stored on the power basis 1, zeta, ..., zeta^(phi(n)-1)
with Fraction coordinates, reduced modulo the n-th cyclotomic polynomial.
Rationals are Q(zeta_1).  Values are immutable; every operation returns a new
element.  Binary operations between different conductors raise FieldMismatch;
callers coerce explicitly with `coerce`.
"""

from fractions import Fraction
from functools import lru_cache
from math import gcd

import mpmath


class FieldMismatch(TypeError):
    pass


def _poly_divmod(num, den):
    # exact division of Fraction-coefficient polynomials, low degree first
    num = list(num)
    q = [Fraction(0)] * max(len(num) - len(den) + 1, 0)
    for i in range(len(num) - len(den), -1, -1):
        c = num[i + len(den) - 1] / den[-1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    while num and num[-1] == 0:
        num.pop()
    return q, num


def _divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of Phi_n over Q, low degree first, computed by exact
    division of x^n - 1 by the cyclotomic polynomials of proper divisors."""
    if n == 1:
        return (Fraction(-1), Fraction(1))
    num = [Fraction(0)] * (n + 1)
    num[0], num[n] = Fraction(-1), Fraction(1)
    den = [Fraction(1)]
    for d in _divisors(n)[:-1]:
        den = _poly_mul(den, cyclotomic_polynomial(d))
    q, r = _poly_divmod(num, den)
    assert not r, "cyclotomic division must be exact"
    return tuple(q)


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _phi(n):
    out = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out -= out // p
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        out -= out // m
    return out


class FieldDescriptor:
    """The cyclotomic field Q(zeta_n) = Q[x]/Phi_n(x)."""

    __slots__ = ("conductor", "degree", "min_poly")

    def __init__(self, conductor):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.min_poly = cyclotomic_polynomial(conductor)
        self.degree = len(self.min_poly) - 1
        assert self.degree == _phi(conductor)
        assert self.min_poly[-1] == 1

    def __eq__(self, other):
        return isinstance(other, FieldDescriptor) and other.conductor == self.conductor

    def __hash__(self):
        return hash(("FieldDescriptor", self.conductor))

    def __repr__(self):
        return f"Q(zeta_{self.conductor})"

    def zero(self):
        return CycloNum(self, (Fraction(0),) * self.degree)

    def one(self):
        return self.from_rational(1)

    def from_rational(self, q):
        coords = [Fraction(q)] + [Fraction(0)] * (self.degree - 1)
        return CycloNum(self, tuple(coords))

    def zeta_power(self, k):
        """zeta_n^k as a field element, any integer k."""
        k %= self.conductor
        coords = [Fraction(0)] * (self.conductor + 1)
        coords[k] = Fraction(1)
        return CycloNum(self, _reduce(coords, self.min_poly, self.degree))


@lru_cache(maxsize=None)
def cyclo_field(n):
    return FieldDescriptor(n)


def _reduce(coords, min_poly, degree):
    coords = list(coords)
    for i in range(len(coords) - 1, degree - 1, -1):
        c = coords[i]
        if c:
            for j in range(len(min_poly) - 1):
                coords[i - degree + j] -= c * min_poly[j]
        coords.pop()
    while len(coords) < degree:
        coords.append(Fraction(0))
    return tuple(coords)


class CycloNum:
    """An element of Q(zeta_n) with exact Fraction coordinates."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = tuple(Fraction(c) for c in coords)
        assert len(self.coords) == field.degree

    # -- helpers -----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, CycloNum):
            if other.field != self.field:
                raise FieldMismatch(
                    f"cannot mix {self.field} with {other.field}; coerce first"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def as_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.coords[0]

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.field, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return CycloNum(self.field, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        prod = _poly_mul(self.coords, o.coords)
        return CycloNum(self.field, _reduce(prod, self.field.min_poly, self.field.degree))

    __rmul__ = __mul__

    def inv(self):
        """Multiplicative inverse via the extended Euclidean algorithm in Q[x]."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic number")
        # gcd(self, Phi_n) = 1 since Phi_n is irreducible over Q
        r0, r1 = list(self.field.min_poly), list(self.coords)
        while r1 and r1[-1] == 0:
            r1.pop()
        # track u with u*self = r (mod Phi)
        u0, u1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            u = _poly_sub(u0, _poly_mul(q, u1))
            r0, r1 = r1, r
            u0, u1 = u1, u
            if not r1:
                raise ArithmeticError("unexpected zero remainder in cyclotomic inverse")
        c = r1[0]
        coords = [x / c for x in u1]
        return CycloNum(self.field, _reduce(coords, self.field.min_poly, self.field.degree))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        return self.inv() * other

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = self.field.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self):
        """Complex conjugation, the automorphism zeta -> zeta^(n-1)."""
        return self.galois(self.field.conductor - 1)

    def galois(self, k):
        """The automorphism zeta -> zeta^k for gcd(k, n) = 1."""
        n = self.field.conductor
        if gcd(k, n) != 1:
            raise ValueError("not a Galois exponent")
        out = self.field.zero()
        for i, c in enumerate(self.coords):
            if c:
                out = out + self.field.zeta_power(i * k) * c
        return out

    # -- comparisons -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coords[0] == other
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.field != self.field:
            return False
        return self.coords == other.coords

    def __hash__(self):
        if self.is_rational():
            return hash(self.coords[0])
        return hash((self.field.conductor, self.coords))

    def __repr__(self):
        if self.is_rational():
            return str(self.coords[0])
        terms = ",".join(str(c) for c in self.coords)
        return f"[{terms}]@zeta{self.field.conductor}"

    # -- numerics ----------------------------------------------------------
    def embed(self, digits=30):
        """Complex approximation with zeta_n -> exp(2 pi i / n); the error is
        below 10^-digits at the returned working precision."""
        with mpmath.workdps(digits + 10):
            z = mpmath.exp(2j * mpmath.pi / self.field.conductor)
            acc = mpmath.mpc(0)
            for c in reversed(self.coords):
                acc = acc * z + mpmath.mpf(c.numerator) / c.denominator
            return acc


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    out = [x - y for x, y in zip(a, b)]
    while out and out[-1] == 0:
        out.pop()
    return out or [Fraction(0)]


def zeta(n, k=1):
    """zeta_n^k in Q(zeta_n)."""
    return cyclo_field(n).zeta_power(k)


def coerce(a, target):
    """Rewrite `a` in the larger field `target`; the conductor of `a` must
    divide the target conductor (zeta_n = zeta_m^(m/n))."""
    if a.field == target:
        return a
    m, n = target.conductor, a.field.conductor
    if m % n != 0:
        raise FieldMismatch(f"conductor {n} does not divide {m}")
    step = m // n
    out = target.zero()
    for i, c in enumerate(a.coords):
        if c:
            out = out + target.zeta_power(i * step) * c
    return out


def rational(q, field=None):
    """A rational number as a CycloNum (in Q(zeta_1) by default)."""
    f = field or cyclo_field(1)
    return f.from_rational(Fraction(q))


# Frequently used exact constants of Q(zeta_12):
#   zeta_12^3 = i,  zeta_12^4 = e^(2 pi i/3),  zeta_12 + zeta_12^-1 = sqrt(3).
def field12():
    return cyclo_field(12)


def imag_unit():
    return zeta(12, 3)


def zeta3():
    return zeta(12, 4)


def sqrt3():
    f = field12()
    return f.zeta_power(1) + f.zeta_power(11)
