"""Exact linear algebra over the rationals.

Everything here works on plain lists of Fractions. Matrices are lists of
rows. No pivoting tricks are needed beyond nonzero selection since all
arithmetic is exact.
"""

from __future__ import annotations

from fractions import Fraction


def solve_linear(a, b):
    """Solve a square system a x = b exactly.

    Returns the solution vector, or None if the matrix is singular.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = m[col][col]
        for r in range(n):
            if r == col or m[r][col] == 0:
                continue
            factor = m[r][col] / inv
            for c in range(col, n + 1):
                m[r][c] -= factor * m[col][c]
    return [m[i][n] / m[i][i] for i in range(n)]


def det(a):
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        piv = None
        for r in range(col, n):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign = -sign
        result *= m[col][col]
        inv = m[col][col]
        for r in range(col + 1, n):
            if m[r][col] == 0:
                continue
            factor = m[r][col] / inv
            for c in range(col, n):
                m[r][c] -= factor * m[col][c]
    return sign * result


def sign(x):
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def orientation(points):
    """Sign of det [p1-p0, ..., pk-p0] for k+1 points in R^k."""
    p0 = points[0]
    rows = [[p[i] - p0[i] for i in range(len(p0))] for p in points[1:]]
    return sign(det(rows))


def affinely_independent(points):
    """True if the given points (each in R^d, len <= d+1) are affinely independent."""
    p0 = points[0]
    rows = [[p[i] - p0[i] for i in range(len(p0))] for p in points[1:]]
    # rank must equal number of difference vectors
    return _rank(rows) == len(rows)


def _rank(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, nrows):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = m[rank][col]
        for r in range(rank + 1, nrows):
            if m[r][col] == 0:
                continue
            factor = m[r][col] / inv
            for c in range(col, ncols):
                m[r][c] -= factor * m[rank][c]
        rank += 1
        if rank == nrows:
            break
    return rank


def affine_map_from_points(src, dst):
    """Affine map x -> B x + c sending src[i] to dst[i] exactly.

    Needs len(src) == dim + 1 affinely independent source points.
    Returns (B, c) with B a matrix (list of rows) and c a vector, or None
    if the source points are affinely dependent.
    """
    dim = len(src[0])
    n = len(src)
    assert n == dim + 1
    # unknowns per output coordinate: dim matrix entries + 1 offset
    cols = []
    for j in range(dim):
        a = [list(p) + [Fraction(1)] for p in src]
        b = [dst[i][j] for i in range(n)]
        sol = solve_linear(a, b)
        if sol is None:
            return None
        cols.append(sol)
    bmat = [[cols[j][i] for i in range(dim)] for j in range(dim)]
    c = [cols[j][dim] for j in range(dim)]
    return bmat, c


def apply_affine(bmat, c, x):
    return [sum(bmat[i][j] * x[j] for j in range(len(x))) + c[i] for i in range(len(bmat))]


def mat_vec(a, x):
    return [sum(row[j] * x[j] for j in range(len(x))) for row in a]
