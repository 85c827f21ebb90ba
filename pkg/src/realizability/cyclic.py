"""Intersection cocycle of the moment-curve map, evaluated combinatorially.

Two simplices spanned by points on the moment curve in R^m intersect iff
the dimension of the larger one is ceil(m/2) and their vertex labels
strictly alternate along the curve; the intersection sign depends only on
m. Everything reduces to that case through the swap rule
I(x, y) = (-1)^{dim x * dim y} I(y, x).
"""

from __future__ import annotations


def moment_intersection(s, t, m):
    """Intersection number of the moment-curve simplices on s and t.

    Dimensions must be complementary (dim s + dim t = m) and the vertex
    sets disjoint.
    """
    s, t = tuple(s), tuple(t)
    k, l = len(s) - 1, len(t) - 1
    if k + l != m:
        raise ValueError(f"dimensions not complementary: {k} + {l} != {m}")
    if set(s) & set(t):
        raise ValueError(f"simplices not disjoint: {s} {t}")
    swap_sign = 1
    if k < l or (k == l and t[0] < s[0]):
        s, t = t, s
        k, l = l, k
        if (k * l) % 2:
            swap_sign = -1
    if k != (m + 1) // 2:
        return 0
    merged = []
    for i in range(l + 1):
        merged.append(s[i])
        merged.append(t[i])
    if k > l:
        merged.append(s[k])
    if any(merged[i] >= merged[i + 1] for i in range(len(merged) - 1)):
        return 0
    return swap_sign * (-1 if (k * (k - 1) // 2) % 2 else 1)


def moment_cocycle(c, m):
    """Value of the moment map's intersection cocycle on an m-cell."""
    s, t = c
    if len(s) + len(t) - 2 != m:
        raise ValueError(f"cell dimension {len(s) + len(t) - 2} != {m}")
    base = moment_intersection(s, t, m)
    return -base if (len(s) - 1) % 2 else base
