"""Exact scalar arithmetic: arbitrary-precision rationals and quadratic irrationals.

Rationals are gmpy2.mpq values (Fraction-compatible semantics, much faster).
Quadratic irrationals a + b*sqrt(D) with D a squarefree integer are the only
non-rational constants the engine ever manipulates exactly; anything of higher
algebraic degree surfaces as UnsupportedFieldError at the call site.
"""

from __future__ import annotations

import math

import gmpy2
from gmpy2 import mpq

QQ = mpq

_ZERO = mpq(0)
_ONE = mpq(1)


class UnsupportedFieldError(Exception):
    """Raised when a computation would leave Q and its quadratic extensions."""


def qq(x, y=None):
    """Coerce to an exact rational."""
    if y is not None:
        return mpq(x, y)
    if isinstance(x, mpq):
        return x
    return mpq(x)


def is_rational(x) -> bool:
    return isinstance(x, (int, mpq)) or type(x) is bool


def qq_floor(x) -> int:
    x = qq(x)
    return int(x.numerator // x.denominator)


def qq_is_integer(x) -> bool:
    return qq(x).denominator == 1


def squarefree_decompose_int(n: int) -> tuple[int, int]:
    """Write n = s*s*d with d squarefree (sign kept in d). Returns (s, d)."""
    if n == 0:
        return (1, 0)
    sign = -1 if n < 0 else 1
    n = abs(n)
    s, d = 1, 1
    # trial division is plenty for the integer sizes produced here
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    d *= n
    return (s, sign * d)


def rational_sqrt(x):
    """Exact square root of a nonnegative rational, or None if not a square."""
    x = qq(x)
    if x < 0:
        return None
    num, den = int(x.numerator), int(x.denominator)
    rn = math.isqrt(num)
    rd = math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return mpq(rn, rd)
    return None


class QuadNum:
    """Exact quadratic irrational a + b*sqrt(disc); disc squarefree, not 0 or 1.

    b may be zero (then the value is rational but keeps its field tag).
    Arithmetic mixes freely with ints/rationals; mixing two different
    discriminants raises UnsupportedFieldError.
    """

    __slots__ = ("a", "b", "disc")

    def __init__(self, a, b, disc: int):
        if disc in (0, 1):
            raise ValueError("disc must be a squarefree integer other than 0, 1")
        self.a = qq(a)
        self.b = qq(b)
        self.disc = int(disc)

    # -- helpers -------------------------------------------------------

    @staticmethod
    def make(a, b, disc: int):
        """Build a + b*sqrt(disc), reducing disc by its square part."""
        s, d = squarefree_decompose_int(disc)
        if d == 0:
            return qq(a)
        if d == 1:
            return qq(a) + qq(b) * s
        v = QuadNum(a, qq(b) * s, d)
        return v.a if v.b == 0 else v

    def conj(self):
        return QuadNum(self.a, -self.b, self.disc)

    def norm(self):
        return self.a * self.a - self.b * self.b * self.disc

    def is_rational_value(self) -> bool:
        return self.b == 0

    def as_rational(self):
        if self.b != 0:
            raise UnsupportedFieldError("value is irrational: %s" % self)
        return self.a

    def _coerce(self, other):
        if is_rational(other):
            return QuadNum(qq(other), _ZERO, self.disc)
        if isinstance(other, QuadNum):
            if other.disc != self.disc and other.b != 0 and self.b != 0:
                raise UnsupportedFieldError(
                    "mixing sqrt(%d) with sqrt(%d)" % (self.disc, other.disc))
            if other.disc != self.disc:
                # one of them is actually rational
                if other.b == 0:
                    return QuadNum(other.a, _ZERO, self.disc)
                return other._coerce_self_into(self)
            return other
        return NotImplemented

    def _coerce_self_into(self, other):
        return QuadNum(self.a, _ZERO, other.disc)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if isinstance(o, QuadNum) and o.disc != self.disc:
            return o + self.a
        return _qn_normalize(self.a + o.a, self.b + o.b, self.disc)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.disc)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadNum) else -qq(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if isinstance(o, QuadNum) and o.disc != self.disc:
            return o * self.a
        a = self.a * o.a + self.b * o.b * self.disc
        b = self.a * o.b + self.b * o.a
        return _qn_normalize(a, b, self.disc)

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero quadratic number")
        return _qn_normalize(self.a / n, -self.b / n, self.disc)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if isinstance(o, QuadNum) and o.disc != self.disc:
            return self * (qq(1) / o.a)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = QuadNum(_ONE, _ZERO, self.disc)
        base = self
        while n:
            if n & 1:
                r = r * base
            base = base * base
            n >>= 1
        return r if isinstance(r, QuadNum) else r

    def __eq__(self, other):
        if is_rational(other):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadNum):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return (self.disc == other.disc and self.a == other.a
                    and self.b == other.b)
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.disc))

    def __repr__(self):
        return "QuadNum(%s, %s, %d)" % (self.a, self.b, self.disc)

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return "%s*sqrt(%d)" % (self.b, self.disc)
        return "%s + %s*sqrt(%d)" % (self.a, self.b, self.disc)

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.disc)


def _qn_normalize(a, b, disc):
    if b == 0:
        return qq(a)
    return QuadNum(a, b, disc)


def quad_roots(a, b, c):
    """Exact roots of a*x^2 + b*x + c over Q (a != 0).

    Returns a list of two roots, each a rational or a QuadNum, or None when
    the roots are not expressible over a real-or-imaginary quadratic field
    (never happens: any rational quadratic has such roots).
    """
    a, b, c = qq(a), qq(b), qq(c)
    if a == 0:
        raise ValueError("not a quadratic")
    disc = b * b - 4 * a * c
    r = rational_sqrt(disc) if disc >= 0 else None
    if r is not None:
        return [(-b + r) / (2 * a), (-b - r) / (2 * a)]
    # disc = (p/q)^2 * d with d squarefree: sqrt(disc) = (p/q) sqrt(d)
    num, den = int(disc.numerator), int(disc.denominator)
    s, d = squarefree_decompose_int(num * den)
    coef = mpq(s, den)
    half = 2 * a
    return [
        QuadNum(-b / half, coef / half, d),
        QuadNum(-b / half, -coef / half, d),
    ]


def value_conj(x):
    """Conjugate of a constant: identity on rationals, quadratic conjugation."""
    if isinstance(x, QuadNum):
        return x.conj()
    return qq(x)
