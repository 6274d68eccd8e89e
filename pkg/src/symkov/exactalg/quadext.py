"""The quadratic extension Q(z, sqrt(w)) and its elements a + b*sqrt(w).

A field context fixes one radicand w: an integer-coefficient squarefree
polynomial with squarefree content (so distinct contexts mean genuinely
different extensions).  Elements are pairs of rational functions.
"""

from __future__ import annotations

from .numbers import QQ, UnsupportedFieldError, qq, squarefree_decompose_int
from .poly import P_ONE, Poly
from .ratfunc import RF_ONE, RF_ZERO, RatFunc, ratfunc


def canonical_radicand(delta: RatFunc):
    """Write delta = s^2 * w with w a canonical radicand polynomial.

    Returns (w: Poly, s: RatFunc).  w has integer coefficients, is squarefree
    as a polynomial, has squarefree integer content, and positive leading
    coefficient unless the sign cannot be extracted (negative definite scale).
    Raises ZeroDivisionError on zero input.
    """
    delta = ratfunc(delta) if not isinstance(delta, RatFunc) else delta
    if delta.is_zero():
        raise ZeroDivisionError("radicand must be nonzero")
    # delta = num/den = num*den / den^2
    s = RatFunc(P_ONE, delta.den)
    p = delta.num * delta.den
    content, ints = p.content_int()
    p = Poly(ints)  # primitive, positive lc
    w_poly = P_ONE
    for f, mult in p.factor_irreducible():
        q, r = divmod(mult, 2)
        if q:
            s = s * RatFunc(f ** q)
        if r:
            w_poly = w_poly * f
    # w_poly is monic with rational coefficients; rescale to integers
    c2, ints2 = w_poly.content_int()
    w_poly = Poly(ints2)
    content = content * c2
    # content = u^2 * c with c squarefree
    num_s, num_d = squarefree_decompose_int(int(content.numerator))
    den_s, den_d = squarefree_decompose_int(int(content.denominator))
    s = s * QQ(num_s, den_s * den_d)
    c = num_d * den_d
    return w_poly * c, s


class QuadExtField:
    """Context for Q(z, sqrt(w)); also usable as a linear-algebra domain."""

    def __init__(self, w: Poly):
        if w.is_zero() or w.degree < 1:
            raise ValueError("radicand must be a nonconstant polynomial")
        wc, s = canonical_radicand(RatFunc(w))
        if not (s == RF_ONE or s == -RF_ONE):
            raise ValueError("radicand not canonical: %s = (%s)^2 * (%s)"
                             % (w, s, wc))
        self.w = wc
        self.w_rf = RatFunc(wc)
        self.zero = QuadExtFunc(RF_ZERO, RF_ZERO, self)
        self.one = QuadExtFunc(RF_ONE, RF_ZERO, self)
        self.sqrt_w = QuadExtFunc(RF_ZERO, RF_ONE, self)

    def __eq__(self, other):
        return isinstance(other, QuadExtField) and self.w == other.w

    def __hash__(self):
        return hash(("QuadExtField", self.w))

    def element(self, a, b=0) -> "QuadExtFunc":
        return QuadExtFunc(_rf(a), _rf(b), self)

    def from_int(self, n) -> "QuadExtFunc":
        return QuadExtFunc(ratfunc(qq(n)), RF_ZERO, self)

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def inv(self, x):
        return x.inverse()

    def __repr__(self):
        return "QuadExtField(sqrt(%s))" % self.w


class BaseFieldType:
    """Q(z) presented with the same domain protocol as QuadExtField."""

    w = None

    def __init__(self):
        self.zero = RF_ZERO
        self.one = RF_ONE

    def element(self, a, b=0):
        if _rf(b) != RF_ZERO:
            raise UnsupportedFieldError("sqrt part in base field element")
        return _rf(a)

    def from_int(self, n):
        return ratfunc(qq(n))

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def inv(self, x):
        return RF_ONE / x

    def __eq__(self, other):
        return isinstance(other, BaseFieldType)

    def __hash__(self):
        return hash("BaseFieldType")

    def __repr__(self):
        return "BaseField"


BaseField = BaseFieldType()


def _rf(x) -> RatFunc:
    r = x if isinstance(x, RatFunc) else ratfunc(x)
    if r is NotImplemented:
        raise TypeError("cannot coerce %r to a rational function" % (x,))
    return r


class QuadExtFunc:
    """a + b*sqrt(w) with rational-function parts a, b."""

    __slots__ = ("a", "b", "field")

    def __init__(self, a: RatFunc, b: RatFunc, field: QuadExtField):
        self.a = a
        self.b = b
        self.field = field

    # -- structure -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def is_rational_part_only(self) -> bool:
        return self.b.is_zero()

    def as_ratfunc(self) -> RatFunc:
        if not self.b.is_zero():
            raise UnsupportedFieldError("element has a sqrt part: %s" % self)
        return self.a

    def conjugate(self) -> "QuadExtFunc":
        return QuadExtFunc(self.a, -self.b, self.field)

    def norm(self) -> RatFunc:
        return self.a * self.a - self.b * self.b * self.field.w_rf

    def _coerce(self, other):
        if isinstance(other, QuadExtFunc):
            if other.field != self.field:
                raise UnsupportedFieldError("mismatched radicands: %s vs %s"
                                            % (self.field.w, other.field.w))
            return other
        r = ratfunc(other) if not isinstance(other, RatFunc) else other
        if r is NotImplemented:
            return NotImplemented
        return QuadExtFunc(r, RF_ZERO, self.field)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return QuadExtFunc(self.a + o.a, self.b + o.b, self.field)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtFunc(-self.a, -self.b, self.field)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        w = self.field.w_rf
        return QuadExtFunc(self.a * o.a + self.b * o.b * w,
                           self.a * o.b + self.b * o.a, self.field)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExtFunc":
        n = self.norm()
        if n.is_zero():
            if self.is_zero():
                raise ZeroDivisionError("division by zero element")
            raise UnsupportedFieldError(
                "zero divisor: radicand %s is a square" % self.field.w)
        return QuadExtFunc(self.a / n, -self.b / n, self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        r = self.field.one
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b, self.field.w))

    def derivative(self) -> "QuadExtFunc":
        # (b*sqrt(w))' = (b' + b*w'/(2w)) * sqrt(w)
        w = self.field.w_rf
        return QuadExtFunc(self.a.derivative(),
                           self.b.derivative() + self.b * w.derivative() / (2 * w),
                           self.field)

    def __str__(self):
        if self.b.is_zero():
            return str(self.a)
        bs = "sqrt(%s)" % self.field.w if self.b == RF_ONE \
            else "(%s)*sqrt(%s)" % (self.b, self.field.w)
        if self.a.is_zero():
            return bs
        return "%s + %s" % (self.a, bs)

    def __repr__(self):
        return "QuadExtFunc(%s, %s, sqrt(%s))" % (self.a, self.b, self.field.w)


def quadext_arith(x: QuadExtFunc, y: QuadExtFunc | None, op: str):
    """Field arithmetic dispatch: add, mul, div, conjugate."""
    if op == "conjugate":
        return x.conjugate()
    if y is None:
        raise ValueError("binary operation %r needs two operands" % op)
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError("unknown operation %r" % op)
