import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from realizability.cyclic import moment_cocycle, moment_intersection
from realizability.deleted_product import cells_full, coboundary_row


def test_alternating_examples():
    assert moment_intersection((0, 2, 4), (1, 3), 3) == -1
    assert moment_intersection((0, 1, 2), (3, 4), 3) == 0
    assert moment_intersection((0, 2), (1, 3), 2) == 1


def test_cocycle_examples():
    assert moment_cocycle(((0, 2, 4), (1, 3)), 3) == -1
    assert moment_cocycle(((1, 3), (0, 2, 4)), 3) == 1
    assert moment_cocycle(((0, 2), (1, 3)), 2) == -1


def test_rejects_bad_input():
    with pytest.raises(ValueError, match="complementary"):
        moment_intersection((0, 1), (2, 3), 3)
    with pytest.raises(ValueError, match="disjoint"):
        moment_intersection((0, 1), (1, 2, 3), 3)
    with pytest.raises(ValueError, match="dimension"):
        moment_cocycle(((0, 1), (2, 3)), 3)


def _all_m_cells(n, m):
    return cells_full(n, m, m)


@pytest.mark.parametrize("m", [2, 3])
def test_swap_symmetry_identity(m):
    # phi(s x t) = (-1)^{(k+1)(l+1)+1} phi(t x s) on all m-cells, 7 vertices
    for s, t in _all_m_cells(6, m):
        k, l = len(s) - 1, len(t) - 1
        sign = -1 if ((k + 1) * (l + 1) + 1) % 2 else 1
        assert moment_cocycle((s, t), m) == sign * moment_cocycle((t, s), m)


@pytest.mark.parametrize("m", [2, 3])
def test_cocycle_condition(m):
    # signed sum of values over the boundary of every (m+1)-cell vanishes
    for c in cells_full(6, m + 1, m):
        total = sum(sg * moment_cocycle(face, m) for face, sg in coboundary_row(c))
        assert total == 0, c


@given(st.data())
@settings(max_examples=300, deadline=None, derandomize=True)
def test_swap_rule_consistency(data):
    m = data.draw(st.sampled_from([2, 3, 4]))
    verts = data.draw(st.sets(st.integers(0, 11), min_size=m + 2, max_size=m + 2))
    verts = sorted(verts)
    ks = data.draw(st.integers(1, m + 1))
    chosen = data.draw(st.permutations(verts))
    s = tuple(sorted(chosen[:ks]))
    t = tuple(sorted(chosen[ks:]))
    k, l = len(s) - 1, len(t) - 1
    swap = -1 if (k * l) % 2 else 1
    assert moment_intersection(s, t, m) == swap * moment_intersection(t, s, m)
