"""Truncated Laurent series with pluggable exact or high-precision coefficients.

A Series is correct modulo O(t^prec) and stores coefficients for exponents
[offset, prec).  Coefficient domains: rationals, quadratic irrationals with a
fixed discriminant, or mpmath complex numbers (decimal fallback).
"""

from __future__ import annotations

import mpmath

from .exactalg import QuadNum, qq
from .linalg import QQ_DOMAIN, QQDomain


class QuadNumDomain:
    """Q(sqrt(disc)) scalars."""

    def __init__(self, disc: int):
        self.disc = disc
        self.zero = qq(0)
        self.one = qq(1)

    def is_zero(self, x):
        return x == 0

    def inv(self, x):
        return 1 / x

    def from_int(self, n):
        return qq(n)


class MPDomain:
    """mpmath complex scalars at a fixed working precision."""

    def __init__(self, dps: int = 100):
        self.dps = dps
        with mpmath.workdps(dps):
            self.zero = mpmath.mpc(0)
            self.one = mpmath.mpc(1)

    def is_zero(self, x):
        return x == 0

    def inv(self, x):
        with mpmath.workdps(self.dps):
            return 1 / x

    def from_int(self, n):
        with mpmath.workdps(self.dps):
            return mpmath.mpc(n)

    def convert(self, x):
        with mpmath.workdps(self.dps):
            if isinstance(x, QuadNum):
                return (mpmath.mpc(x.a.numerator) / int(x.a.denominator)
                        + (mpmath.mpc(x.b.numerator) / int(x.b.denominator))
                        * mpmath.sqrt(mpmath.mpc(x.disc)))
            if hasattr(x, "numerator"):
                return mpmath.mpc(x.numerator) / int(x.denominator)
            return mpmath.mpc(x)


class Series:
    __slots__ = ("dom", "offset", "coeffs", "prec")

    def __init__(self, dom, offset: int, coeffs, prec: int):
        coeffs = list(coeffs)
        if offset > prec:
            offset, coeffs = prec, []
        # strip leading zeros, keep offset + len == prec
        while coeffs and dom.is_zero(coeffs[0]):
            coeffs.pop(0)
            offset += 1
        if len(coeffs) > prec - offset:
            coeffs = coeffs[:prec - offset]
        while len(coeffs) < prec - offset:
            coeffs.append(dom.zero)
        if not coeffs:
            offset = prec
        self.dom = dom
        self.offset = offset
        self.coeffs = coeffs
        self.prec = prec

    # -- constructors ----------------------------------------------------

    @staticmethod
    def zero(dom, prec):
        return Series(dom, prec, [], prec)

    @staticmethod
    def const(dom, value, prec):
        return Series(dom, 0, [value], prec)

    @staticmethod
    def var(dom, prec):
        return Series(dom, 1, [dom.one], prec)

    # -- queries ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(self.dom.is_zero(c) for c in self.coeffs)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if not self.dom.is_zero(c):
                return self.offset + i
        return None  # zero within precision

    def coeff(self, k: int):
        if k < self.offset:
            return self.dom.zero
        if k >= self.prec:
            raise ValueError("coefficient %d beyond precision %d" % (k, self.prec))
        return self.coeffs[k - self.offset]

    def truncate(self, prec: int) -> "Series":
        return Series(self.dom, self.offset, self.coeffs[:max(0, prec - self.offset)], prec)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        prec = min(self.prec, other.prec)
        off = min(self.offset, other.offset, prec)
        n = prec - off
        out = [self.dom.zero] * n
        for i, c in enumerate(self.coeffs):
            k = self.offset + i - off
            if 0 <= k < n:
                out[k] = out[k] + c
        for i, c in enumerate(other.coeffs):
            k = other.offset + i - off
            if 0 <= k < n:
                out[k] = out[k] + c
        return Series(self.dom, off, out, prec)

    def __neg__(self) -> "Series":
        return Series(self.dom, self.offset, [-c for c in self.coeffs], self.prec)

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def __mul__(self, other) -> "Series":
        if not isinstance(other, Series):
            return Series(self.dom, self.offset,
                          [c * other for c in self.coeffs], self.prec)
        prec = min(self.prec + other.offset, other.prec + self.offset)
        off = self.offset + other.offset
        n = max(0, prec - off)
        out = [self.dom.zero] * n
        for i, a in enumerate(self.coeffs):
            if self.dom.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= n:
                    break
                out[k] = out[k] + a * b
        return Series(self.dom, off, out, prec)

    __rmul__ = __mul__

    def inverse(self) -> "Series":
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverting a zero series")
        lead = self.coeff(v)
        n = self.prec - v  # number of known unit coefficients
        unit = [self.coeff(v + i) for i in range(n)]
        inv0 = 1 / lead
        out = [inv0]
        for k in range(1, n):
            s = self.dom.zero
            for j in range(1, k + 1):
                s = s + unit[j] * out[k - j]
            out.append(-inv0 * s)
        return Series(self.dom, -v, out, n - v)

    def __truediv__(self, other: "Series") -> "Series":
        return self * other.inverse()

    def derivative(self) -> "Series":
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.offset + i
            out.append(self.dom.from_int(k) * c)
        return Series(self.dom, self.offset - 1, out, self.prec - 1)

    def integrate(self) -> "Series":
        """Antiderivative with zero constant term; needs no 1/t term."""
        out = []
        for i, c in enumerate(self.coeffs):
            k = self.offset + i
            if k == -1:
                if not self.dom.is_zero(c):
                    raise ValueError("residue obstruction: cannot integrate 1/t term")
                out.append(self.dom.zero)
            else:
                out.append(c * self.dom.inv(self.dom.from_int(k + 1)))
        return Series(self.dom, self.offset + 1, out, self.prec + 1)

    # -- transcendental/algebraic helpers -------------------------------------

    def exp_of(self) -> "Series":
        """exp(self) for a series of valuation >= 1 (so exp(...)(0) = 1)."""
        v = self.valuation()
        if v is not None and v < 1:
            raise ValueError("exp needs valuation >= 1, got %s" % v)
        prec = self.prec
        f = [self.coeff(k) for k in range(0, prec)]
        out = [self.dom.one] + [self.dom.zero] * (prec - 1)
        # E' = f' E  =>  k*E_k = sum_{j=1..k} j*f_j E_{k-j}
        for k in range(1, prec):
            s = self.dom.zero
            for j in range(1, k + 1):
                s = s + self.dom.from_int(j) * f[j] * out[k - j]
            out[k] = s * self.dom.inv(self.dom.from_int(k))
        return Series(self.dom, 0, out, prec)

    def nth_root(self, m: int, seed) -> "Series":
        """m-th root with given seed for the root of the leading coefficient.

        Valuation must be divisible by m; seed^m must equal the leading
        coefficient (caller's responsibility; enforced approximately).
        """
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("root of zero series")
        if v % m != 0:
            raise ValueError("valuation %d not divisible by %d (ramified root)"
                             % (v, m))
        n = self.prec - v
        unit = [self.coeff(v + i) for i in range(n)]
        # u^m = unit; recurrence from u * unit' = m * unit * u'
        out = [seed]
        c0 = unit[0]
        for k in range(1, n):
            # coefficient of t^{k-1} in u*unit' - m*unit*u' = 0, solve for out[k]
            s = self.dom.zero
            for j in range(0, k):
                # u_j * (k-j) * unit_{k-j}
                s = s + out[j] * self.dom.from_int(k - j) * unit[k - j]
            for j in range(1, k):
                s = s - self.dom.from_int(m) * self.dom.from_int(j) * out[j] * unit[k - j]
            denom = self.dom.from_int(m) * self.dom.from_int(k) * c0
            out.append(s * self.dom.inv(denom))
        return Series(self.dom, v // m, out, n + v // m)

    def sqrt_with_seed(self, seed) -> "Series":
        return self.nth_root(2, seed)

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs[:8]):
            terms.append("%s*t^%d" % (c, self.offset + i))
        return "Series(%s + O(t^%d))" % (" + ".join(terms) or "0", self.prec)


def poly_series(dom, poly, point, prec: int, convert=None) -> Series:
    """Series of a Q-polynomial at z = point + t."""
    conv = convert or (lambda x: x)
    shifted = poly.shift(point) if point != 0 else poly
    coeffs = [conv(c) for c in shifted.coeffs[:prec]]
    return Series(dom, 0, coeffs + [dom.zero] * (prec - len(coeffs)), prec)


def ratfunc_series(dom, f, point, prec: int, convert=None) -> Series:
    """Laurent series of a rational function at z = point + t."""
    pad = prec + 2 * max(0, f.den.degree) + 2
    num = poly_series(dom, f.num, point, pad, convert)
    den = poly_series(dom, f.den, point, pad, convert)
    return (num * den.inverse()).truncate(prec)
