"""Exact dense linear algebra over any of the engine's coefficient fields.

A domain is any object with attributes/methods: zero, one, is_zero(x),
inv(x), from_int(n).  Matrices are plain lists of lists of field elements.
"""

from __future__ import annotations

from .exactalg import qq


class QQDomain:
    """Plain rational scalars as a linear-algebra domain."""

    def __init__(self):
        self.zero = qq(0)
        self.one = qq(1)

    def is_zero(self, x):
        return x == 0

    def inv(self, x):
        return 1 / x

    def from_int(self, n):
        return qq(n)


QQ_DOMAIN = QQDomain()


def zeros(dom, n, m):
    return [[dom.zero for _ in range(m)] for _ in range(n)]


def identity(dom, n):
    return [[dom.one if i == j else dom.zero for j in range(n)]
            for i in range(n)]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            s = ai[0] * b[0][j]
            for t in range(1, k):
                s = s + ai[t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = row[0] * v[0]
        for t in range(1, len(v)):
            s = s + row[t] * v[t]
        out.append(s)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_derivative(a):
    return [[x.derivative() for x in row] for row in a]


def rref(dom, mat):
    """Reduced row echelon form; returns (matrix, pivot column list)."""
    m = [row[:] for row in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        pr = None
        for i in range(r, rows):
            if not dom.is_zero(m[i][c]):
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        piv = dom.inv(m[r][c])
        m[r] = [x * piv for x in m[r]]
        for i in range(rows):
            if i != r and not dom.is_zero(m[i][c]):
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def rank(dom, mat):
    return len(rref(dom, mat)[1])


def nullspace(dom, mat):
    """Basis of the right nullspace, as a list of vectors."""
    if not mat:
        return []
    cols = len(mat[0])
    red, pivots = rref(dom, mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [dom.zero] * cols
        v[fc] = dom.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def det(dom, mat):
    n = len(mat)
    m = [row[:] for row in mat]
    d = dom.one
    for c in range(n):
        pr = None
        for i in range(c, n):
            if not dom.is_zero(m[i][c]):
                pr = i
                break
        if pr is None:
            return dom.zero
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            d = -d
        d = d * m[c][c]
        piv = dom.inv(m[c][c])
        for i in range(c + 1, n):
            if not dom.is_zero(m[i][c]):
                f = m[i][c] * piv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return d


def inverse(dom, mat):
    n = len(mat)
    aug = [row[:] + ident_row for row, ident_row in zip(mat, identity(dom, n))]
    red, pivots = rref(dom, aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def solve(dom, mat, rhs):
    """One solution of mat @ x = rhs, or None when inconsistent."""
    if not mat:
        return None
    cols = len(mat[0])
    aug = [row[:] + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(dom, aug)
    if cols in pivots:
        return None
    x = [dom.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][cols]
    return x


def column_space_coords(dom, basis_cols, vec):
    """Coordinates of vec in span(basis_cols), or None if outside."""
    mat = [[col[i] for col in basis_cols] for i in range(len(vec))]
    return solve(dom, mat, vec)
