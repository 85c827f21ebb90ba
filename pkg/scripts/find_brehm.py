"""Reconstruct the 9-vertex non-realizable Moebius strip by constrained search.

The published facet list is pinned down by hard invariants: f-vector
(9, 24, 15), a deleted product with 510 cells of dimension 2 (which forces
sum_v C(deg v, 2) = 111), a boundary consisting of a single triangle, and
integer infeasibility of the obstruction system. The search runs over
candidates symmetric under the vertex rotation v -> v+3 (mod 9), which is
the only symmetry compatible with the degree statistics, and verifies the
survivors with the solver.

Usage: python scripts/find_brehm.py [--all-classes]
"""

from __future__ import annotations

import sys
from itertools import combinations

sys.path.insert(0, "src")

from realizability.deleted_product import cells
from realizability.ilp import solve
from realizability.simplicial import SimplicialComplex
from realizability.surface_checks import boundary_edges, is_moebius_strip
from realizability.system_builder import SystemConfig, build


def rot(t, shift=3):
    return tuple(sorted((v + shift) % 9 for v in t))


def orbit(t):
    return frozenset({tuple(t), rot(t), rot(rot(t))})


def candidate_triangle_sets():
    invariant = [(0, 3, 6), (1, 4, 7), (2, 5, 8)]
    orbits = sorted(
        {orbit(t) for t in combinations(range(9), 3)} - {orbit(invariant[0])},
        key=lambda o: sorted(o),
    )
    # five free orbits, or four plus all three invariant triangles
    for chosen in combinations(orbits, 5):
        yield [t for o in chosen for t in sorted(o)]
    for chosen in combinations(orbits, 4):
        yield [t for o in chosen for t in sorted(o)] + invariant


def quick_filters(tris):
    edges = {}
    for t in tris:
        for i in range(3):
            e = tuple(sorted((t[i], t[(i + 1) % 3])))
            edges[e] = edges.get(e, 0) + 1
    if len(edges) != 24 or any(c > 2 for c in edges.values()):
        return False
    bnd = [e for e, c in edges.items() if c == 1]
    if len(bnd) != 3:
        return False
    if len({v for e in bnd for v in e}) != 3:
        return False  # boundary must close into a triangle
    deg = {}
    for a, b in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    if len(deg) != 9:
        return False
    if sum(d * (d - 1) // 2 for d in deg.values()) != 111:
        return False
    return True


def canonical_form(tris):
    """Canonical facet list over all vertex relabelings (degree-refined)."""
    from collections import defaultdict

    deg = defaultdict(int)
    edges = set()
    for t in tris:
        for i in range(3):
            e = tuple(sorted((t[i], t[(i + 1) % 3])))
            edges.add(e)
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    verts = sorted(deg)
    classes = defaultdict(list)
    for v in verts:
        classes[deg[v]].append(v)
    best = None
    from itertools import permutations

    class_keys = sorted(classes)
    pools = [classes[k] for k in class_keys]

    def assign(idx, mapping):
        nonlocal best
        if idx == len(pools):
            relab = tuple(
                sorted(tuple(sorted(mapping[v] for v in t)) for t in tris)
            )
            if best is None or relab < best:
                best = relab
            return
        pool = pools[idx]
        base = sum(len(p) for p in pools[:idx])
        for perm in permutations(range(base, base + len(pool))):
            for v, img in zip(pool, perm):
                mapping[v] = img
            assign(idx + 1, mapping)

    assign(0, {})
    return best


def main():
    survivors = []
    seen = set()
    count = 0
    for tris in candidate_triangle_sets():
        count += 1
        if not quick_filters(tris):
            continue
        if not is_moebius_strip(tris):
            continue
        form = canonical_form(tris)
        if form in seen:
            continue
        seen.add(form)
        survivors.append((tris, form))
        print(f"[{count}] moebius candidate, class #{len(seen)}")
    print(f"searched {count} candidates; {len(survivors)} isomorphism classes")

    for tris, _ in survivors:
        k = SimplicialComplex.from_facets(tris, num_vertices=9, name="moebius")
        nvar = len(cells(k, 2))
        model = build(k, 3, SystemConfig(preset="minimal", symmetry_reduction=False))
        verdict = solve(model, time_limit=600)
        print(
            f"facets={sorted(map(tuple, k.facets))}\n  boundary={boundary_edges(tris)}"
            f" cells={nvar} model=({len(model.variables)} vars, {len(model.rows)} rows)"
            f" -> {verdict.status} (nodes={verdict.stats.get('nodes')})"
        )


if __name__ == "__main__":
    main()
