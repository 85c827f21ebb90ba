import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realizability.deleted_product import (
    canonicalize,
    cell_dim,
    cells,
    cells_full,
    coboundary_row,
    decode_cell,
    encode_cell,
    symmetry_sign,
)
from realizability.simplicial import SimplicialComplex, load_builtin


def test_cell_counts_match_published_table():
    assert len(cells(load_builtin("rp2"), 2)) == 150
    assert len(cells(load_builtin("bipyramid"), 2)) == 48
    assert len(cells(load_builtin("csaszar"), 2)) == 322


def test_single_triangle_vertex_pairs():
    k = SimplicialComplex.from_facets([(0, 1, 2)])
    assert len(cells(k, 0)) == 6


def test_cells_full_counts():
    assert len(cells_full(8, 2, 3)) == 1764
    assert len(cells_full(2, 0, 1)) == 6
    # frozen from brute-force enumeration over the 7-vertex simplex
    assert len(cells_full(6, 2, 3)) == 490


def test_cells_full_brute_force_small():
    from itertools import combinations

    n, d, cap = 4, 2, 2
    expected = set()
    verts = range(n + 1)
    for ks in range(1, cap + 2):
        for s in combinations(verts, ks):
            for kt in range(1, cap + 2):
                if (ks - 1) + (kt - 1) != d:
                    continue
                for t in combinations([v for v in verts if v not in s], kt):
                    expected.add((s, t))
    assert set(cells_full(n, d, cap)) == expected


def test_enumeration_deterministic():
    k = load_builtin("rp2")
    assert cells(k, 2) == cells(k, 2)
    first = cells(k, 2)[0]
    assert first == ((0,), (1, 2, 4))


def test_encoding_round_trip():
    c = ((0, 2), (1, 3))
    assert encode_cell(c) == "0_2x1_3"
    assert decode_cell("0_2x1_3") == c


def test_canonicalize_examples():
    # edge x edge: even sign, already canonical
    c = ((0, 2), (1, 3))
    assert canonicalize(c) == (c, 1)
    assert symmetry_sign(c) == 1
    # vertex x triangle: sign (-1)^{1*3} = -1
    c = ((1,), (0, 2, 3))
    rep, sg = canonicalize(c)
    assert rep == ((0, 2, 3), (1,)) and sg == -1
    # already canonical cell maps to itself with +1
    c = ((0, 2, 3), (1,))
    assert canonicalize(c) == (c, 1)


@given(st.data())
@settings(max_examples=200, deadline=None, derandomize=True)
def test_canonicalize_involution_consistent(data):
    verts = data.draw(st.sets(st.integers(0, 9), min_size=2, max_size=6))
    verts = sorted(verts)
    cut = data.draw(st.integers(1, len(verts) - 1))
    chosen = data.draw(st.permutations(verts))
    s, t = tuple(sorted(chosen[:cut])), tuple(sorted(chosen[cut:]))
    rep, sg = canonicalize((s, t))
    rep2, sg2 = canonicalize(rep)
    assert rep2 == rep and sg2 == 1
    # applying the symmetry twice returns the original value
    assert sg * sg == 1
    srep, ssg = canonicalize((t, s))
    assert srep == rep
    assert ssg * sg * symmetry_sign((s, t)) in (1, -1)


def test_coboundary_row_examples():
    row = coboundary_row(((0, 1), (2, 3)))
    assert row == [
        (((1,), (2, 3)), 1),
        (((0,), (2, 3)), -1),
        (((0, 1), (3,)), -1),
        (((0, 1), (2,)), 1),
    ]
    # vertex first factor contributes nothing to the boundary
    row = coboundary_row(((4,), (1, 2)))
    assert row == [(((4,), (2,)), 1), (((4,), (1,)), -1)]


def test_double_coboundary_cancels():
    for c in [((0, 1, 2), (3, 4)), ((0, 1), (2, 3)), ((0, 1, 2), (3, 4, 5))]:
        acc = {}
        for face, sg in coboundary_row(c):
            for sub, sg2 in coboundary_row(face):
                acc[sub] = acc.get(sub, 0) + sg * sg2
        assert all(v == 0 for v in acc.values()), c


def test_cell_dim():
    assert cell_dim(((0,), (1, 2))) == 1
    assert cell_dim(((0, 1), (2, 3))) == 2
