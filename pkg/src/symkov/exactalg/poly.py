"""Dense univariate polynomials over Q, lowest degree first.

Irreducible factorization is delegated to sympy (standard machinery, not part
of the algorithms implemented here); everything else is self-contained.
"""

from __future__ import annotations

import gmpy2
import sympy

from .numbers import QQ, QuadNum, qq, quad_roots

_SYM_Z = sympy.Symbol("z")


class Poly:
    """Immutable polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [qq(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- construction ----------------------------------------------------

    @staticmethod
    def const(c):
        return Poly([qq(c)])

    @staticmethod
    def monomial(deg: int, c=1):
        return Poly([0] * deg + [c])

    # -- basic queries -----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self):
        return self.coeffs[-1] if self.coeffs else qq(0)

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return qq(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = qq(other)
            return Poly([c * x for x in self.coeffs])
        if self.is_zero() or other.is_zero():
            return Poly()
        a, b = self.coeffs, other.coeffs
        out = [qq(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        r = Poly.const(1)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def divmod(self, other: "Poly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [qq(0)] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        dlc = other.lc()
        dd = other.degree
        while len(rem) - 1 >= dd and any(c != 0 for c in rem):
            while rem and rem[-1] == 0:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            k = len(rem) - 1 - dd
            c = rem[-1] / dlc
            q[k] = c
            for i in range(dd + 1):
                rem[k + i] -= c * other.coeffs[i]
            rem.pop()
        return Poly(q), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    # -- calculus / evaluation ----------------------------------------------

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        """Horner evaluation; x may be rational, QuadNum, or anything with * +."""
        r = None
        for c in reversed(self.coeffs):
            r = c if r is None else r * x + c
        if r is None:
            return qq(0)
        return r

    def compose(self, other: "Poly") -> "Poly":
        """self(other(z))."""
        r = Poly()
        for c in reversed(self.coeffs):
            r = r * other + Poly.const(c)
        return r

    def shift(self, c) -> "Poly":
        """self(z + c)."""
        return self.compose(Poly([qq(c), 1]))

    def reverse(self, at_degree: int | None = None) -> "Poly":
        """z^d * self(1/z) with d = at_degree (default: its own degree)."""
        d = self.degree if at_degree is None else at_degree
        if d < self.degree:
            raise ValueError("reversal degree too small")
        out = [qq(0)] * (d + 1)
        for i, c in enumerate(self.coeffs):
            out[d - i] = c
        return Poly(out)

    # -- normal forms ------------------------------------------------------

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        c = self.lc()
        return Poly([x / c for x in self.coeffs])

    def content_int(self):
        """(content, primitive integer coefficient list); sign goes with content."""
        if self.is_zero():
            return qq(0), []
        den = 1
        for c in self.coeffs:
            den = gmpy2.lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gmpy2.gcd(g, v)
        g = int(g)
        if ints[-1] < 0:
            g = -g
        return QQ(g, den), [v // g for v in ints]

    def primitive(self) -> "Poly":
        _, ints = self.content_int()
        return Poly(ints)

    # -- gcd and friends -----------------------------------------------------

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd via primitive PRS over the integers."""
        a, b = self, other
        if a.is_zero():
            return b.monic()
        if b.is_zero():
            return a.monic()
        _, fa = a.content_int()
        _, fb = b.content_int()
        fa, fb = Poly(fa), Poly(fb)
        if fa.degree < fb.degree:
            fa, fb = fb, fa
        while not fb.is_zero():
            # pseudo-remainder keeps everything integral
            k = fa.degree - fb.degree + 1
            r = (fa * (fb.lc() ** k)) % fb
            if r.is_zero():
                fa, fb = fb, r
            else:
                fa, fb = fb, r.primitive()
        return fa.monic()

    def squarefree_part(self) -> "Poly":
        if self.degree <= 0:
            return Poly.const(1)
        return self.exact_div(self.gcd(self.derivative())).monic()

    def squarefree_decomposition(self):
        """Yun's algorithm: list of (factor, multiplicity), factors monic."""
        if self.degree <= 0:
            return []
        f = self.monic()
        d = f.derivative()
        a = f.gcd(d)
        b = f.exact_div(a)
        c = d.exact_div(a)
        out = []
        i = 1
        while b.degree > 0:
            t = c - b.derivative()
            g = b.gcd(t)
            if g.degree > 0:
                out.append((g.monic(), i))
            b = b.exact_div(g)
            c = t.exact_div(g)
            i += 1
        return out

    # -- factorization (sympy bridge) ------------------------------------

    def to_sympy(self):
        _, ints = self.content_int()
        return sympy.Poly(list(reversed(ints)), _SYM_Z, domain="QQ")

    @staticmethod
    def from_sympy(sp) -> "Poly":
        cs = [qq(int(c.p), int(c.q)) for c in reversed(sp.all_coeffs())]
        return Poly(cs)

    def factor_irreducible(self):
        """Monic irreducible factors over Q: list of (Poly, multiplicity)."""
        if self.degree <= 0:
            return []
        out = []
        for fac, mult in self.to_sympy().factor_list()[1]:
            out.append((Poly.from_sympy(fac).monic(), int(mult)))
        out.sort(key=lambda t: (t[0].degree, t[0].coeffs))
        return out

    def rational_roots(self):
        """All rational roots (with multiplicity collapsed), via factorization."""
        return sorted(
            -f[0] for f, _ in self.factor_irreducible() if f.degree == 1)

    def roots_quadratic_closure(self):
        """All roots of degree <= 2 over Q, as rationals / QuadNum.

        Returns (roots, leftover_degree) where leftover_degree counts root
        multiplicity not representable in a quadratic extension.
        """
        roots, leftover = [], 0
        for f, mult in self.factor_irreducible():
            if f.degree == 1:
                roots.extend([-f[0]] * mult)
            elif f.degree == 2:
                for r in quad_roots(f[2], f[1], f[0]):
                    roots.extend([r] * mult)
            else:
                leftover += f.degree * mult
        return roots, leftover

    # -- resultant ---------------------------------------------------------

    def resultant(self, other: "Poly"):
        """Resultant over Q via the Euclidean recursion."""
        f, g = self, other
        if f.is_zero() or g.is_zero():
            return qq(0)
        res = qq(1)
        while g.degree > 0:
            r = f % g
            if r.is_zero():
                return qq(0)
            res *= (g.lc() ** (f.degree - r.degree)) * \
                (qq(-1) ** (f.degree * g.degree))
            f, g = g, r
        return res * g.lc() ** f.degree

    # -- display -----------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for i in reversed(range(len(self.coeffs))):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(_coef_str(c))
            else:
                zpow = "z" if i == 1 else "z^%d" % i
                if c == 1:
                    parts.append(zpow)
                elif c == -1:
                    parts.append("-" + zpow)
                else:
                    parts.append("%s*%s" % (_coef_str(c), zpow))
        s = parts[0]
        for p in parts[1:]:
            s += " - " + p[1:] if p.startswith("-") else " + " + p
        return s

    def __repr__(self):
        return "Poly([%s])" % ", ".join(str(c) for c in self.coeffs)


def _coef_str(c):
    return str(c)


P_ZERO = Poly()
P_ONE = Poly.const(1)
P_Z = Poly([0, 1])


def lagrange_interpolate(points):
    """Poly through the given (x, y) rational points."""
    result = Poly()
    xs = [qq(x) for x, _ in points]
    for i, (_, yi) in enumerate(points):
        num = Poly.const(1)
        den = qq(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * Poly([-xj, 1])
            den *= xs[i] - xj
        result = result + num * (qq(yi) / den)
    return result
