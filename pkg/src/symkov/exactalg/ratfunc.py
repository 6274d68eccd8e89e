"""Rational functions over Q(z): canonical forms, partial fractions, residues.

Canonical form: monic denominator, gcd(num, den) = 1, zero is 0/1.  The
residue/principal-part helpers work per irreducible denominator factor so no
algebraic numbers are needed until a caller explicitly asks for per-pole data.
"""

from __future__ import annotations

from .numbers import (QQ, QuadNum, UnsupportedFieldError, qq, qq_floor,
                      qq_is_integer)
from .poly import P_ONE, P_ZERO, Poly


class RatFunc:
    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if not isinstance(num, Poly):
            num = Poly.const(num) if not isinstance(num, (list, tuple)) \
                else Poly(num)
        if den is None:
            den = P_ONE
        elif not isinstance(den, Poly):
            den = Poly.const(den) if not isinstance(den, (list, tuple)) \
                else Poly(den)
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = P_ZERO, P_ONE
            return
        g = num.gcd(den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        c = den.lc()
        self.num = num * (1 / c)
        self.den = den.monic()

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def as_constant(self):
        if not self.is_constant():
            raise ValueError("not a constant: %s" % self)
        return self.num[0]

    def as_poly(self) -> Poly:
        if self.den.degree != 0:
            raise ValueError("not a polynomial: %s" % self)
        return self.num

    def __eq__(self, other):
        other = ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return ratfunc(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (1 / self) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den)

    def eval(self, x):
        dv = self.den.eval(x)
        if dv == 0:
            raise ZeroDivisionError("pole at evaluation point")
        return self.num.eval(x) / dv

    def poly_and_proper(self):
        """Split into (polynomial part, proper remainder)."""
        q, r = self.num.divmod(self.den)
        return q, RatFunc(r, self.den)

    def val_at_factor(self, p: Poly) -> int:
        """Multiplicity of the irreducible p: >0 zero, <0 pole, 0 neither."""
        v = 0
        n = self.num
        while True:
            q, r = n.divmod(p)
            if not r.is_zero():
                break
            n = q
            v += 1
        if v:
            return v
        d = self.den
        while True:
            q, r = d.divmod(p)
            if not r.is_zero():
                break
            d = q
            v -= 1
        return v

    def val_at_infinity(self) -> int:
        """Order at infinity in the local parameter 1/z (deg den - deg num)."""
        if self.is_zero():
            raise ValueError("valuation of zero")
        return self.den.degree - self.num.degree

    def __str__(self):
        if self.den == P_ONE:
            return str(self.num)
        ns = str(self.num)
        if self.num.degree > 0 or len([c for c in self.num.coeffs if c]) > 1:
            ns = "(%s)" % ns
        return "%s/(%s)" % (ns, self.den)

    def __repr__(self):
        return "RatFunc(%r, %r)" % (self.num, self.den)


def ratfunc(x) -> "RatFunc":
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x, P_ONE, _canonical=True)
    if isinstance(x, (int, QQ)):
        return RatFunc(Poly.const(x), P_ONE, _canonical=True)
    return NotImplemented


RF_ZERO = RatFunc(P_ZERO, P_ONE, _canonical=True)
RF_ONE = RatFunc(P_ONE, P_ONE, _canonical=True)
RF_Z = RatFunc(Poly([0, 1]), P_ONE, _canonical=True)


def rf_normalize(num: Poly, den: Poly) -> RatFunc:
    """Canonical rational function num/den."""
    return RatFunc(num, den)


# -- per-factor local data ---------------------------------------------------

def mod_inverse(a: Poly, p: Poly) -> Poly:
    """Inverse of a modulo the irreducible p, by extended Euclid."""
    a = a % p
    if a.is_zero():
        raise ZeroDivisionError("not invertible mod p")
    r0, r1 = p, a
    s0, s1 = P_ZERO, P_ONE
    while not r1.is_zero():
        q, r = r0.divmod(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("argument shares a factor with the modulus")
    return (s0 * (1 / r0.lc())) % p


def residue_element(f: RatFunc, p: Poly) -> Poly:
    """Residue of f at the place p (simple pole required), as element mod p.

    The returned polynomial r (deg < deg p) gives the residue r(alpha) at
    every root alpha of p.  Zero when f has no pole at p.
    """
    v = f.val_at_factor(p)
    if v >= 0:
        return P_ZERO
    if v < -1:
        raise ValueError("pole of order %d at %s is not simple" % (-v, p))
    q = f.den.exact_div(p)
    return (f.num * mod_inverse(q * p.derivative(), p)) % p


def sum_over_roots(c: Poly, p: Poly, k: int = 1) -> RatFunc:
    """sum over roots a of p of c(a)/(z-a)^k, as a rational function.

    For k = 1 this is ((c * p') mod p)/p; higher k by differentiating.
    """
    base = RatFunc((c * p.derivative()) % p, p)
    for j in range(1, k):
        base = base.derivative() * QQ(-1, j)
    return base


def principal_part_at_factor(f: RatFunc, p: Poly):
    """[(j, A_j)] with the principal part of f at p equal to sum A_j/p^j."""
    v = f.val_at_factor(p)
    if v >= 0:
        return []
    e = -v
    q = f.den.exact_div(p ** e)
    num = f.num
    out = []
    for j in range(e, 0, -1):
        a = (num * mod_inverse(q, p)) % p
        if not a.is_zero():
            out.append((j, a))
        num = (num - a * q).exact_div(p)
    return out


# -- logarithmic-derivative structure -----------------------------------------

def log_derivative(g: RatFunc) -> RatFunc:
    if g.is_zero():
        raise ZeroDivisionError("log derivative of zero")
    return g.derivative() / g


def rational_residues(omega: RatFunc):
    """[(p, residue)] over irreducible denominator factors, or None.

    None when omega has a pole of order > 1 or a residue that is not a
    rational constant; the polynomial part is ignored here.
    """
    out = []
    for p, mult in omega.den.factor_irreducible():
        if mult > 1:
            return None
        r = residue_element(omega, p)
        if r.degree > 0:
            return None
        out.append((p, r[0]))
    return out

def is_rational_log_derivative(omega: RatFunc):
    """The rational g with g'/g = omega (up to constant), or None."""
    if omega.is_zero():
        return RF_ONE
    polypart, proper = omega.poly_and_proper()
    if not polypart.is_zero():
        return None
    res = rational_residues(proper)
    if res is None:
        return None
    num, den = P_ONE, P_ONE
    for p, r in res:
        if not qq_is_integer(r):
            return None
        n = int(r)
        if n > 0:
            num = num * p ** n
        elif n < 0:
            den = den * p ** (-n)
    g = RatFunc(num, den)
    if log_derivative(g) != omega:
        return None
    return g


def split_integer_log_part(omega: RatFunc):
    """(g, reduced) with omega = reduced + g'/g and integer residue parts in g.

    Only simple poles with rational residues contribute to g; every other
    local behaviour stays inside `reduced`.
    """
    num, den = P_ONE, P_ONE
    for p, mult in omega.den.factor_irreducible():
        if mult > 1:
            continue
        r = residue_element(omega, p)
        if r.degree > 0:
            continue
        n = qq_floor(r[0])
        if n > 0:
            num = num * p ** n
        elif n < 0:
            den = den * p ** (-n)
    g = RatFunc(num, den)
    return g, omega - log_derivative(g)


# -- public partial fractions --------------------------------------------------

class PartialFractions:
    """Exact decomposition with per-pole terms (poles of degree <= 2 over Q)."""

    def __init__(self, poly_part: Poly, terms):
        self.poly_part = poly_part
        self.terms = terms  # {(pole, order): coefficient}

    def recombine(self) -> RatFunc:
        f = RatFunc(self.poly_part)
        done = set()
        for (pole, order), c in self.terms.items():
            if (pole, order) in done:
                continue
            done.add((pole, order))
            if isinstance(pole, QuadNum):
                partner = pole.conj()
                c2 = self.terms.get((partner, order), 0)
                done.add((partner, order))
                num, den = _quad_pair_term(pole, order, c, partner, c2)
                f = f + RatFunc(num, den)
            else:
                f = f + RatFunc(Poly.const(c), Poly([-pole, 1]) ** order)
        return f

    def __repr__(self):
        return "PartialFractions(%r, %r)" % (self.poly_part, self.terms)


def _quad_pair_term(a1, k, c1, a2, c2):
    """c1/(z-a1)^k alone; caller pairs it with its conjugate for rationality."""
    # (z - a2)^k expanded with QuadNum coefficients, times c1, plus conjugate
    left = _qn_poly_pow(a1, k)    # (z - a1)^k coefficients
    right = _qn_poly_pow(a2, k)
    n = len(right)
    num = []
    for i in range(n):
        v = c1 * right[i] + c2 * left[i]
        if isinstance(v, QuadNum):
            v = v.as_rational()
        num.append(v)
    den_c = []
    prod = _qn_poly_mul(left, right)
    for v in prod:
        if isinstance(v, QuadNum):
            v = v.as_rational()
        den_c.append(v)
    return Poly(num), Poly(den_c)


def _qn_poly_pow(root, k):
    out = [qq(1)]
    base = [-root if isinstance(root, QuadNum) else qq(-root), qq(1)]
    for _ in range(k):
        out = _qn_poly_mul(out, base)
    return out


def _qn_poly_mul(a, b):
    out = [qq(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return out


def partial_fractions(f: RatFunc) -> PartialFractions:
    """Full decomposition; poles must have degree <= 2 over Q."""
    poly_part, proper = f.poly_and_proper()
    terms = {}
    for p, mult in proper.den.factor_irreducible():
        if p.degree > 2:
            raise UnsupportedFieldError(
                "pole of algebraic degree %d: %s" % (p.degree, p))
        parts = principal_part_at_factor(proper, p)
        if p.degree == 1:
            root = -p[0]
            for j, a in parts:
                terms[(root, j)] = a[0]
        else:
            from .numbers import quad_roots
            r1, r2 = quad_roots(p[2], p[1], p[0])
            for j, a in parts:
                # A(z)/p^j -> coefficients at both roots, top order first
                _extract_quadratic_terms(a, p, j, r1, r2, terms)
    return PartialFractions(poly_part, terms)


def _extract_quadratic_terms(a: Poly, p: Poly, j: int, r1, r2, terms):
    """Split A(z)/p(z)^j into per-root pole terms for a quadratic p."""
    while j > 0 and not a.is_zero():
        diff = r1 - r2 if not isinstance(r1, QuadNum) else r1 - r2
        c1 = a.eval(r1) / (diff ** j)
        c2 = a.eval(r2) / ((-diff) ** j)
        if c1 != 0:
            terms[(r1, j)] = terms.get((r1, j), 0) + c1
        if c2 != 0:
            terms[(r2, j)] = terms.get((r2, j), 0) + c2
        # subtract c1*(z-r2)^j + c2*(z-r1)^j (a rational polynomial) and reduce
        sub = _qn_poly_scale_add(_qn_poly_pow(r2, j), c1,
                                 _qn_poly_pow(r1, j), c2)
        b = a - Poly(sub)
        a = b.exact_div(p)
        j -= 1


def _qn_poly_scale_add(pa, ca, pb, cb):
    n = max(len(pa), len(pb))
    out = []
    for i in range(n):
        va = pa[i] if i < len(pa) else qq(0)
        vb = pb[i] if i < len(pb) else qq(0)
        v = ca * va + cb * vb
        if isinstance(v, QuadNum):
            v = v.as_rational()
        out.append(v)
    return out
