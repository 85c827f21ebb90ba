"""Cells of the deleted product: ordered pairs of disjoint simplices.

A cell (sigma, tau) has dimension dim sigma + dim tau. The text encoding
used for solver variable names joins vertices with '_' and the two
factors with 'x', e.g. '0_2x1_3' for {0,2} x {1,3}. Tests depend on this
encoding byte for byte.
"""

from __future__ import annotations

from itertools import combinations

from .simplicial import sort_key

Cell = tuple


def cell(first, second):
    if set(first) & set(second):
        raise ValueError(f"factors not disjoint: {first} {second}")
    return (tuple(first), tuple(second))


def cell_dim(c):
    return len(c[0]) + len(c[1]) - 2


def encode_cell(c):
    return "_".join(map(str, c[0])) + "x" + "_".join(map(str, c[1]))


def decode_cell(text):
    a, b = text.split("x")
    return (tuple(int(v) for v in a.split("_")), tuple(int(v) for v in b.split("_")))


def cells(k, d):
    """All ordered pairs of disjoint faces of K with dimension sum d.

    Deterministic order: by (dim sigma, sigma, tau).
    """
    out = []
    for s in k.faces:
        ds = len(s) - 1
        dt = d - ds
        if dt < 0:
            continue
        sset = set(s)
        for t in k.faces:
            if len(t) - 1 == dt and not sset & set(t):
                out.append((s, t))
    out.sort(key=lambda c: (sort_key(c[0]), sort_key(c[1])))
    return out


def cells_full(n, d, max_face_dim):
    """Cells of the deleted product of the full N-simplex face set.

    `n` is the largest vertex id (N); faces are capped at max_face_dim.
    """
    out = []
    verts = range(n + 1)
    for ds in range(0, min(d, max_face_dim) + 1):
        dt = d - ds
        if dt > max_face_dim:
            continue
        for s in combinations(verts, ds + 1):
            rest = [v for v in verts if v not in s]
            for t in combinations(rest, dt + 1):
                out.append((s, t))
    out.sort(key=lambda c: (sort_key(c[0]), sort_key(c[1])))
    return out


def symmetry_sign(c):
    """Sign relating a cell's cochain value to its swap's:
    value(c) = sign * value(swap(c))."""
    return -1 if (len(c[0]) * len(c[1])) % 2 else 1


def canonicalize(c):
    """Representative under the swap symmetry, with the sign s such that
    value(c) = s * value(representative).

    The representative puts the factor containing the smallest vertex
    first, which is the numerically lexicographically smaller encoding.
    """
    if c[0][0] < c[1][0]:
        return c, 1
    return (c[1], c[0]), symmetry_sign(c)


def coboundary_row(c):
    """Faces of a cell with the signs of the product boundary.

    d(sigma x tau) = d(sigma) x tau + (-1)^{dim sigma} sigma x d(tau);
    vertices contribute nothing. All faces stay in the deleted product.
    """
    s, t = c
    out = []
    if len(s) > 1:
        for i in range(len(s)):
            out.append(((s[:i] + s[i + 1 :], t), -1 if i % 2 else 1))
    if len(t) > 1:
        base = (len(s) - 1) % 2
        for j in range(len(t)):
            sign = -1 if (base + j) % 2 else 1
            out.append(((s, t[:j] + t[j + 1 :]), sign))
    return out
