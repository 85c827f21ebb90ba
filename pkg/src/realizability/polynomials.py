"""Univariate polynomials over Q: Sturm sequences and exact root isolation.

Polynomials are lists of Fraction coefficients, lowest degree first,
normalized so the leading coefficient is nonzero (the zero polynomial is
the empty list). Used to isolate the real eigenvalues of small rational
matrices and to determine signs of polynomial expressions at those roots
without ever leaving exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction


def poly(coeffs):
    p = [Fraction(c) for c in coeffs]
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(p) - 1


def evaluate(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p, q):
    n = max(len(p), len(q))
    out = [Fraction(0)] * n
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return poly(out)


def neg(p):
    return [-c for c in p]


def mul(p, q):
    if not p or not q:
        return []
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def scale(p, s):
    return poly([c * s for c in p])


def derivative(p):
    return poly([i * c for i, c in enumerate(p)][1:])


def divmod_poly(p, q):
    """Euclidean division; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    quot = [Fraction(0)] * max(0, len(p) - len(q) + 1)
    dq = degree(q)
    lead = q[-1]
    while len(r) - 1 >= dq and r:
        s = r[-1] / lead
        k = len(r) - 1 - dq
        quot[k] = s
        for i, c in enumerate(q):
            r[k + i] -= s * c
        while r and r[-1] == 0:
            r.pop()
    return poly(quot), poly(r)


def gcd(p, q):
    """Monic gcd."""
    a, b = poly(p), poly(q)
    while b:
        a, b = b, divmod_poly(a, b)[1]
    if a:
        a = scale(a, 1 / a[-1])
    return a


def squarefree(p):
    g = gcd(p, derivative(p))
    if degree(g) <= 0:
        return poly(p)
    return divmod_poly(p, g)[0]


def sturm_chain(p):
    chain = [poly(p)]
    d = derivative(p)
    if d:
        chain.append(d)
        while degree(chain[-1]) > 0:
            rem = divmod_poly(chain[-2], chain[-1])[1]
            if not rem:
                break
            chain.append(neg(rem))
    return chain


def _sign_variations(chain, x):
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v != 0:
            signs.append(1 if v > 0 else -1)
    count = 0
    for a, b in zip(signs, signs[1:]):
        if a != b:
            count += 1
    return count


def count_roots(chain, a, b):
    """Number of distinct real roots in (a, b] of the chain's polynomial."""
    return _sign_variations(chain, a) - _sign_variations(chain, b)


def root_bound(p):
    """Cauchy bound: all real roots lie in (-B, B)."""
    lead = abs(p[-1])
    return 1 + max(abs(c) / lead for c in p)


def isolate_real_roots(p, lo=None, hi=None):
    """Disjoint rational intervals (a, b], each containing exactly one root.

    Multiple roots are reported once (isolation runs on the squarefree
    part). Intervals are returned sorted.
    """
    sf = squarefree(p)
    if degree(sf) <= 0:
        return []
    bound = root_bound(sf)
    a = Fraction(lo) if lo is not None else -bound
    b = Fraction(hi) if hi is not None else bound
    chain = sturm_chain(sf)
    out = []

    def split(a, b, n):
        if n == 0:
            return
        if n == 1:
            out.append((a, b))
            return
        mid = (a + b) / 2
        # nudge off a root so interval endpoints stay sign-definite
        while evaluate(sf, mid) == 0:
            mid = (a + mid) / 2
        split(a, mid, count_roots(chain, a, mid))
        split(mid, b, count_roots(chain, mid, b))

    split(a, b, count_roots(chain, a, b))
    return sorted(out)


def refine(p, interval, tol=Fraction(1, 2**20)):
    """Shrink an isolating interval of a squarefree p by bisection."""
    a, b = interval
    fa = evaluate(p, a)
    while b - a > tol:
        mid = (a + b) / 2
        fm = evaluate(p, mid)
        if fm == 0:
            # exact root hit: return a degenerate pinch around it
            return (mid, mid)
        if (fa > 0) == (fm > 0):
            a, fa = mid, fm
        else:
            b = mid
    return (a, b)


def sign_at_root(q, p, interval):
    """Sign of q at the unique root of squarefree p inside (a, b].

    Exact: decides zero via gcd, otherwise refines until the sign of q is
    constant on an interval still containing the root.
    """
    a, b = interval
    g = gcd(q, p)
    if degree(g) >= 1:
        chain_g = sturm_chain(g)
        if count_roots(chain_g, a, b) >= 1:
            return 0
    chain_p = sturm_chain(p)
    chain_q = sturm_chain(q)
    while True:
        if count_roots(chain_q, a, b) == 0:
            va = evaluate(q, a)
            if va != 0:
                return 1 if va > 0 else -1
            vb = evaluate(q, b)
            return 1 if vb > 0 else -1
        mid = (a + b) / 2
        while evaluate(p, mid) == 0:
            mid = (a + mid) / 2
        if count_roots(chain_p, a, mid) == 1:
            b = mid
        else:
            a = mid


def char_poly(d):
    """Characteristic polynomial det(D - u E) of a rational matrix.

    Computed by exact cofactor expansion over the polynomial ring; the
    matrices here are tiny (m <= 4).
    """
    n = len(d)
    entries = [
        [poly([d[i][j]]) if i != j else poly([d[i][j], -1]) for j in range(n)]
        for i in range(n)
    ]
    return _poly_det(entries)


def _poly_det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    total = []
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = mul(m[0][j], _poly_det(minor))
        if j % 2 == 1:
            term = neg(term)
        total = add(total, term)
    return total


def adjugate_column_polys(d, col):
    """Column `col` of adj(D - u E) as polynomials in u.

    adj(A)[i][col] = cofactor C[col][i] = (-1)^{col+i} minor(col, i).
    """
    n = len(d)
    entries = [
        [poly([d[i][j]]) if i != j else poly([d[i][j], -1]) for j in range(n)]
        for i in range(n)
    ]
    out = []
    for i in range(n):
        minor = [
            [entries[r][c] for c in range(n) if c != i]
            for r in range(n)
            if r != col
        ]
        m = _poly_det(minor) if minor else poly([1])
        if (col + i) % 2 == 1:
            m = neg(m)
        out.append(m)
    return out
