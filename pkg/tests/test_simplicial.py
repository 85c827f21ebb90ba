import json

import pytest

from realizability.simplicial import (
    ComplexError,
    SimplicialComplex,
    boundary,
    closure,
    load_builtin,
    parse_complex,
    simplex,
)


def test_parse_single_triangle():
    k = parse_complex('{"num_vertices": 3, "facets": [[0, 1, 2]]}')
    assert k.f_vector() == (3, 3, 1)
    assert set(k.faces) == {
        (0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2),
    }


def test_parse_rejects_out_of_range_vertex():
    with pytest.raises(ComplexError, match="out of range"):
        parse_complex('{"num_vertices": 2, "facets": [[0, 3]]}')


def test_parse_rejects_empty_facets():
    with pytest.raises(ComplexError, match="empty facet list"):
        parse_complex('{"num_vertices": 2, "facets": []}')


def test_parse_rejects_malformed_json():
    with pytest.raises(ComplexError, match="JSON"):
        parse_complex("{not json")


def test_parse_one_based_shift():
    k = parse_complex('{"num_vertices": 3, "facets": [[1, 2, 3]], "one_based": true}')
    assert k.facets == ((0, 1, 2),)


def test_unused_vertex_warns():
    with pytest.warns(UserWarning, match="unused"):
        parse_complex('{"num_vertices": 4, "facets": [[0, 1, 2]]}')


def test_facets_deduplicated_and_sorted():
    k = SimplicialComplex.from_facets([(2, 1, 0), (0, 1, 2), (0, 3)], num_vertices=4)
    assert k.facets == ((0, 3), (0, 1, 2))


def test_boundary_triangle():
    assert boundary((0, 1, 2)) == [((1, 2), 1), ((0, 2), -1), ((0, 1), 1)]


def test_boundary_edge_and_vertex():
    assert boundary((3, 7)) == [((7,), 1), ((3,), -1)]
    assert boundary((5,)) == []


def test_simplex_validation():
    with pytest.raises(ComplexError):
        simplex((2, 1))
    with pytest.raises(ComplexError):
        simplex(())


def test_double_boundary_cancels():
    for s in [(0, 1, 2), (1, 3, 5, 7), (0, 2, 4, 6, 8)]:
        acc = {}
        for face, sg in boundary(s):
            for sub, sg2 in boundary(face):
                acc[sub] = acc.get(sub, 0) + sg * sg2
        assert all(v == 0 for v in acc.values())


def test_closure_idempotent():
    faces = closure([(0, 1, 2), (2, 3)])
    again = closure(faces)
    assert faces == again


def test_builtin_f_vectors_match_published_table():
    expected = {
        "rp2": (6, 15, 10),
        "bipyramid": (5, 9, 6),
        "csaszar": (7, 21, 14),
        "moebius-brehm": (9, 24, 15),
        "m2-10": (10, 36, 24),
        "m3-10": (10, 42, 28),
        "m4-11": (11, 51, 34),
        "m5-12": (12, 60, 40),
        "m6-12": (12, 66, 44),
    }
    for name, fv in expected.items():
        assert load_builtin(name).f_vector() == fv, name


def test_unknown_builtin():
    with pytest.raises(ComplexError, match="unknown builtin"):
        load_builtin("nope")


def test_data_files_are_valid_json():
    from importlib import resources

    for entry in resources.files("realizability.data").iterdir():
        if entry.name.endswith(".json"):
            doc = json.loads(entry.read_text())
            assert doc["facets"]
