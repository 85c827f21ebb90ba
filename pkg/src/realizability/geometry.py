"""Geometric ground truth: intersection numbers and deformation cochains.

All computations are exact over Q. A vertex map assigns rational
coordinates in R^m; the intersection number of two complementary
simplices is the orientation sign at their (unique) crossing point. The
deformation cochain of a pair of maps counts signed crossings of the
straight-line homotopy prisms; its per-cell values come from an exact
eigenvalue analysis of the local deformation matrix, with real roots
isolated by Sturm sequences.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from . import polynomials as pp
from .deleted_product import canonicalize, cells_full, coboundary_row
from .linalg import (
    affine_map_from_points,
    affinely_independent,
    apply_affine,
    det,
    sign,
    solve_linear,
)


class DegenerateConfigurationError(RuntimeError):
    """A configuration violating the needed general-position assumptions."""


@dataclass(frozen=True)
class PointMap:
    """Vertex -> rational point in R^m, for vertices 0..N."""

    coords: tuple
    m: int

    def point(self, v):
        return self.coords[v]

    @property
    def n_vertices(self):
        return len(self.coords)

    def restrict(self, n_vertices):
        return PointMap(self.coords[:n_vertices], self.m)


def moment_map(n, m):
    """c(i) = (i, i^2, ..., i^m) for i = 0..n, exactly."""
    coords = tuple(
        tuple(Fraction(i**e) for e in range(1, m + 1)) for i in range(n + 1)
    )
    return PointMap(coords, m)


def in_general_position(points, m):
    """Every m+1 of the points affinely independent."""
    if len(points) <= m + 1:
        subsets = [points] if len(points) == m + 1 else []
    else:
        subsets = combinations(points, m + 1)
    return all(affinely_independent(list(sub)) for sub in subsets)


def random_map(n, m, rng, prefix=None, max_tries=200):
    """Random rational map in verified general position.

    Coordinates are integers in [-50, 50] over a denominator <= 10. When a
    prefix map is given its points are copied for the low vertices and the
    rest are resampled until the whole map is in general position.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    fixed = []
    if prefix is not None:
        fixed = [prefix.point(v) for v in range(prefix.n_vertices)]
    for _ in range(max_tries):
        coords = list(fixed)
        for _ in range(n + 1 - len(fixed)):
            coords.append(
                tuple(
                    Fraction(rng.randint(-50, 50), rng.randint(1, 10))
                    for _ in range(m)
                )
            )
        if in_general_position(coords, m):
            return PointMap(tuple(coords), m)
    raise DegenerateConfigurationError(
        f"could not sample a general position map for n={n}, m={m}"
    )


@dataclass(frozen=True)
class DeformationPair:
    """Two maps agreeing on vertices 0..shared_prefix.

    The combined point set (all of f, plus g beyond the prefix) must be in
    general position; shared_prefix = -1 means no shared vertices.
    """

    f: PointMap
    g: PointMap
    shared_prefix: int = -1

    def __post_init__(self):
        if self.f.m != self.g.m or self.f.n_vertices != self.g.n_vertices:
            raise ValueError("maps must share dimension and vertex set")
        k = self.shared_prefix
        for v in range(k + 1):
            if self.f.point(v) != self.g.point(v):
                raise ValueError(f"maps disagree on prefix vertex {v}")
        combined = list(self.f.coords) + list(self.g.coords[k + 1 :])
        if not in_general_position(combined, self.f.m):
            raise DegenerateConfigurationError("combined point set is degenerate")

    @property
    def m(self):
        return self.f.m

    @property
    def n(self):
        return self.f.n_vertices - 1


def random_pair(n, m, seed, shared_prefix=-1, prefix_map=None, max_tries=50):
    """Random deformation pair; g gets the given prefix map (if any), f
    copies g on the shared prefix."""
    rng = random.Random(seed)
    for _ in range(max_tries):
        try:
            g = random_map(n, m, rng, prefix=prefix_map)
            fixed = (
                PointMap(g.coords[: shared_prefix + 1], m)
                if shared_prefix >= 0
                else None
            )
            f = random_map(n, m, rng, prefix=fixed)
            return DeformationPair(f, g, shared_prefix)
        except DegenerateConfigurationError:
            continue
    raise DegenerateConfigurationError(f"no valid pair for n={n}, m={m}")


def intersection_number(pm, s, t):
    """Signed crossing of the images of two complementary simplices.

    0 if the open simplices are disjoint, otherwise the orientation of
    (p, s_1, ..., s_k, t_1, ..., t_l) where p is the crossing point.
    """
    m = pm.m
    k, l = len(s) - 1, len(t) - 1
    if k + l != m:
        raise ValueError(f"dimensions not complementary: {k}+{l} != {m}")
    ps = [pm.point(v) for v in s]
    pt = [pm.point(v) for v in t]
    # barycentric solve: sum a_i ps_i = sum b_j pt_j, sum a = sum b = 1
    n_unk = (k + 1) + (l + 1)
    rows = []
    rhs = []
    for r in range(m):
        rows.append([p[r] for p in ps] + [-p[r] for p in pt])
        rhs.append(Fraction(0))
    rows.append([Fraction(1)] * (k + 1) + [Fraction(0)] * (l + 1))
    rhs.append(Fraction(1))
    rows.append([Fraction(0)] * (k + 1) + [Fraction(1)] * (l + 1))
    rhs.append(Fraction(1))
    assert len(rows) == n_unk
    sol = solve_linear(rows, rhs)
    if sol is None:
        # parallel affine hulls; under general position they are disjoint
        return 0
    alphas, betas = sol[: k + 1], sol[k + 1 :]
    if any(a == 0 for a in alphas) or any(b == 0 for b in betas):
        raise DegenerateConfigurationError("crossing on a simplex boundary")
    if any(a < 0 for a in alphas) or any(b < 0 for b in betas):
        return 0
    p = [
        sum(alphas[i] * ps[i][r] for i in range(k + 1)) for r in range(m)
    ]
    mat = [[Fraction(1)] + list(p)]
    for q in ps[1:]:
        mat.append([Fraction(1)] + list(q))
    for q in pt[1:]:
        mat.append([Fraction(1)] + list(q))
    d = det(mat)
    if d == 0:
        raise DegenerateConfigurationError("degenerate crossing determinant")
    return sign(d)


def cocycle_value(pm, c):
    """Intersection cocycle of a map on an m-cell: (-1)^{dim s} I(s, t)."""
    s, t = c
    v = intersection_number(pm, s, t)
    return -v if (len(s) - 1) % 2 else v


def _shuffle_sign_positions(i_plus, i_minus):
    seq = list(i_plus) + list(i_minus)
    inv = sum(
        1
        for a in range(len(seq))
        for b in range(a + 1, len(seq))
        if seq[a] > seq[b]
    )
    return -1 if inv % 2 else 1


@dataclass
class JData:
    """Exact deformation data local to one (m+1)-subset J."""

    j: tuple
    eps: int  # orientation of g on J
    det_sign: int  # sign of det of the local deformation matrix
    eig1_mult: int  # multiplicity of eigenvalue 1
    crossings: int  # total prism crossings at times in (0,1)
    lam: dict = field(default_factory=dict)  # canonical cell -> value


def deformation_j_data(pair, j):
    """Eigenvalue analysis of the deformation restricted to J.

    Raises DegenerateConfigurationError if any relevant eigenvalue is not
    general (multiple, zero eigenvector component, or zero component sum).
    """
    f, g, m = pair.f, pair.g, pair.m
    j = tuple(sorted(j))
    assert len(j) == m + 1
    src = [tuple(g.point(v)) + (Fraction(0),) for v in j]
    src.append(tuple(f.point(j[0])) + (Fraction(1),))
    dst = []
    for i in range(m + 2):
        e = [Fraction(0)] * (m + 1)
        if i > 0:
            e[i - 1] = Fraction(1)
        dst.append(tuple(e))
    amap = affine_map_from_points(src, dst)
    if amap is None:
        raise DegenerateConfigurationError(f"degenerate frame for J={j}")
    bmat, cvec = amap
    eps = sign(det(bmat))
    dcols = []
    for i in range(1, m + 1):
        img = apply_affine(bmat, cvec, tuple(f.point(j[i])) + (Fraction(1),))
        assert img[m] == 1
        dcols.append(img[:m])
    dmat = [[dcols[i][r] for i in range(m)] for r in range(m)]
    chi = pp.char_poly(dmat)
    det_d = pp.evaluate(chi, Fraction(0))
    if det_d == 0:
        raise DegenerateConfigurationError(f"singular deformation matrix for J={j}")
    multi = pp.gcd(chi, pp.derivative(chi))
    if pp.degree(multi) >= 1 and pp.isolate_real_roots(multi, hi=0):
        raise DegenerateConfigurationError(f"multiple negative eigenvalue for J={j}")
    eig1_mult = 0
    q = chi
    while True:
        quot, rem = pp.divmod_poly(q, pp.poly([-1, 1]))
        if rem:
            break
        eig1_mult += 1
        q = quot
    sf = pp.squarefree(chi)
    chi_prime = pp.derivative(chi)
    data = JData(
        j=j,
        eps=eps,
        det_sign=sign(det_d),
        eig1_mult=eig1_mult,
        crossings=0,
    )
    for interval in pp.isolate_real_roots(chi, hi=0):
        vec_polys = None
        vec_signs = None
        for col in range(m):
            polys = pp.adjugate_column_polys(dmat, col)
            signs = [pp.sign_at_root(p, sf, interval) for p in polys]
            if any(s0 != 0 for s0 in signs):
                vec_polys, vec_signs = polys, signs
                break
        if vec_signs is None or any(s0 == 0 for s0 in vec_signs):
            raise DegenerateConfigurationError(
                f"non-general eigenvector for J={j}"
            )
        sum_poly = pp.poly([0])
        for p in vec_polys:
            sum_poly = pp.add(sum_poly, p)
        ssum = pp.sign_at_root(sum_poly, sf, interval)
        if ssum == 0:
            raise DegenerateConfigurationError(
                f"eigenvector components sum to zero for J={j}"
            )
        if ssum > 0:
            vec_signs = [-s0 for s0 in vec_signs]
        i_plus = (0,) + tuple(i + 1 for i, s0 in enumerate(vec_signs) if s0 > 0)
        i_minus = tuple(i + 1 for i, s0 in enumerate(vec_signs) if s0 < 0)
        shuffle = _shuffle_sign_positions(i_plus, i_minus)
        dsign = pp.sign_at_root(chi_prime, sf, interval)
        tau_plus = tuple(j[i] for i in i_plus)
        tau_minus = tuple(j[i] for i in i_minus)
        key = (tau_plus, tau_minus)
        data.lam[key] = data.lam.get(key, 0) + shuffle * dsign
        data.crossings += 1
    data.lam = {
        key: data.eps * value for key, value in data.lam.items() if value != 0
    }
    return data


def deformation_table(pair, n=None):
    """Deformation cochain values on all canonical (m-1)-cells over the
    full simplex on vertices 0..n (default: the pair's vertex set).

    Cells absent from the mapping have value 0.
    """
    if n is None:
        n = pair.n
    m = pair.m
    table = {}
    for j in combinations(range(n + 1), m + 1):
        data = deformation_j_data(pair, j)
        table.update(data.lam)
    return table


def deformation_value(pair, c):
    """Deformation cochain on one (m-1)-cell."""
    s, t = c
    if len(s) + len(t) - 2 != pair.m - 1:
        raise ValueError(
            f"cell dimension {len(s) + len(t) - 2} != {pair.m - 1}"
        )
    canon, sgn = canonicalize(c)
    data = deformation_j_data(pair, tuple(sorted(s + t)))
    return sgn * data.lam.get(canon, 0)


def table_value(table, c):
    canon, sgn = canonicalize(c)
    return sgn * table.get(canon, 0)


def coboundary_value(table, c):
    """delta(lambda) on an m-cell, evaluated from a value table."""
    return sum(sgn * table_value(table, face) for face, sgn in coboundary_row(c))


@dataclass
class OracleReport:
    """Result of a property check: trial count and observed violations."""

    trials: int
    violations: list
    seed: object = None

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        return {
            "trials": self.trials,
            "violations": self.violations,
            "seed": self.seed,
        }


def fundamental_violations(pair, table, n=None):
    """Check delta(lambda) = phi_f - phi_g on every m-cell over the full
    simplex, given a table of deformation values."""
    if n is None:
        n = pair.n
    m = pair.m
    out = []
    for c in cells_full(n, m, m):
        lhs = coboundary_value(table, c)
        rhs = cocycle_value(pair.f, c) - cocycle_value(pair.g, c)
        if lhs != rhs:
            out.append(
                {
                    "check": "fundamental",
                    "cell": c,
                    "delta_lambda": lhs,
                    "phi_f_minus_phi_g": rhs,
                }
            )
    return out


def check_fundamental(pair, n=None):
    table = deformation_table(pair, n)
    return OracleReport(trials=1, violations=fundamental_violations(pair, table, n))


def bounds_violations(pair, table, n=None):
    """Check the three per-J families of deformation inequalities."""
    from .system_builder import ell, partition_family, shuffle_sign

    if n is None:
        n = pair.n
    m = pair.m
    k = pair.shared_prefix
    out = []
    for j in combinations(range(n + 1), m + 1):
        fam = partition_family(j)
        lj = ell(j, max(k, 0))
        eps = orientation_of(pair.g, j)
        values = {c: table_value(table, c) for c in fam}
        total_abs = sum(abs(v) for v in values.values())
        if total_abs > m - lj:
            out.append({"check": "points", "J": j, "sum_abs": total_abs, "bound": m - lj})
        signed = eps * sum(shuffle_sign(c[0], c[1]) * v for c, v in values.items())
        if not -1 <= signed <= 0:
            out.append({"check": "index1", "J": j, "signed_sum": signed})
        lo = -((m - lj + 1) // 2)
        hi = (m - lj) // 2
        for c, v in values.items():
            sv = eps * shuffle_sign(c[0], c[1]) * v
            if not lo <= sv <= hi:
                out.append(
                    {"check": "index2", "J": j, "cell": c, "value": sv, "range": (lo, hi)}
                )
    return out


def check_bounds(pair, n=None):
    table = deformation_table(pair, n)
    return OracleReport(trials=1, violations=bounds_violations(pair, table, n))


def orientation_of(pm, j):
    """Orientation sign of the simplex spanned by a map on the sorted
    vertex set j."""
    pts = [pm.point(v) for v in sorted(j)]
    base = pts[0]
    rows = [[p[i] - base[i] for i in range(pm.m)] for p in pts[1:]]
    return sign(det(rows))
