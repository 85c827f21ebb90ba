"""Generate vertex-minimal triangulations of orientable surfaces by
bistellar flips, matching the published invariants of the instance table:

    genus 2: 10 vertices, sum_v C(deg v, 2) = 230 (-> 1136 product cells)
    genus 3: 10 vertices, sum_v C(deg v, 2) = 312 (-> 1490 product cells)
    genus 4: 11 vertices, sum_v C(deg v, 2) = 423 (-> 2248 product cells)
    genus 5: 12 vertices, sum_v C(deg v, 2) = 540 (-> 3180 product cells)
    genus 6: 12 vertices, neighborly            (-> 3762 product cells)

Starting point is a connected sum of 7-vertex tori; vertex count is
reduced by 3-1 moves (forcing degree-3 vertices with 2-2 flips), then the
degree statistic is annealed at fixed vertex count. Deterministic for a
fixed seed. Writes data/*.json.

Usage: python scripts/make_surfaces.py [genus ...]
"""

from __future__ import annotations

import json
import random
import sys
from collections import defaultdict

sys.path.insert(0, "src")

from realizability.surface_checks import (
    euler_characteristic,
    genus_closed_orientable,
    is_orientable,
    is_surface,
)

CSASZAR = sorted(
    {tuple(sorted([i % 7, (i + 1) % 7, (i + 3) % 7])) for i in range(7)}
    | {tuple(sorted([i % 7, (i + 2) % 7, (i + 3) % 7])) for i in range(7)}
)

TARGETS = {
    2: (10, 230),
    3: (10, 312),
    4: (11, 423),
    5: (12, 540),
    6: (12, 660),  # neighborly: all degrees 11
}


class Surface:
    def __init__(self, triangles):
        self.tris = set()
        self.edge_map = defaultdict(set)
        self.star = defaultdict(set)
        self.deg = defaultdict(int)
        for t in triangles:
            self.add(t)

    def degree(self, v):
        return self.deg[v]

    def degrees(self):
        return {v: d for v, d in self.deg.items() if d}

    def vertices(self):
        return sorted(v for v, d in self.deg.items() if d)

    def add(self, t):
        t = tuple(sorted(t))
        self.tris.add(t)
        for e in _edges(t):
            if not self.edge_map[e]:
                self.deg[e[0]] += 1
                self.deg[e[1]] += 1
            self.edge_map[e].add(t)
        for v in t:
            self.star[v].add(t)

    def remove(self, t):
        t = tuple(sorted(t))
        self.tris.remove(t)
        for e in _edges(t):
            self.edge_map[e].discard(t)
            if not self.edge_map[e]:
                self.deg[e[0]] -= 1
                self.deg[e[1]] -= 1
        for v in t:
            self.star[v].discard(t)

    def flippable(self, e):
        ts = self.edge_map[e]
        if len(ts) != 2:
            return None
        t1, t2 = sorted(ts)
        c = next(v for v in t1 if v not in e)
        d = next(v for v in t2 if v not in e)
        if c == d:
            return None
        new_e = tuple(sorted((c, d)))
        if self.edge_map[new_e]:
            return None
        a, b = e
        # degree-3 endpoints would be destroyed below 3
        if self.degree(a) <= 3 or self.degree(b) <= 3:
            return None
        return (t1, t2, tuple(sorted((a, c, d))), tuple(sorted((b, c, d))))

    def flip(self, e):
        plan = self.flippable(e)
        if plan is None:
            return False
        t1, t2, n1, n2 = plan
        self.remove(t1)
        self.remove(t2)
        self.add(n1)
        self.add(n2)
        return True

    def contractible_vertex(self, v):
        star = list(self.star[v])
        if len(star) != 3:
            return None
        link = tuple(sorted({u for t in star for u in t if u != v}))
        if len(link) != 3 or link in self.tris:
            return None
        return star, link

    def contract(self, v):
        plan = self.contractible_vertex(v)
        if plan is None:
            return False
        star, link = plan
        for t in star:
            self.remove(t)
        self.add(link)
        return True

    def live_edges(self):
        return sorted(e for e, ts in self.edge_map.items() if ts)


def _edges(t):
    return [
        tuple(sorted((t[0], t[1]))),
        tuple(sorted((t[0], t[2]))),
        tuple(sorted((t[1], t[2]))),
    ]


def connected_sum(k1, k2):
    """Glue two triangle lists along one removed triangle each."""
    off = max(v for t in k1 for v in t) + 1
    t1 = k1[0]
    k2s = [tuple(sorted(v + off for v in t)) for t in k2]
    t2 = k2s[0]
    mapping = dict(zip(t2, t1))
    out = [t for t in k1 if t != t1]
    for t in k2s:
        if t == t2:
            continue
        out.append(tuple(sorted(mapping.get(v, v) for v in t)))
    return relabel_contiguous(out)


def relabel_contiguous(tris):
    verts = sorted({v for t in tris for v in t})
    mapping = {v: i for i, v in enumerate(verts)}
    return sorted(tuple(sorted(mapping[v] for v in t)) for t in tris)


def degree_stat(surface):
    return sum(d * (d - 1) // 2 for d in surface.degrees().values())


def reduce_vertices(surface, target, rng, max_steps=400000):
    """Shrink to the target vertex count with 3-1 moves, forcing degree-3
    vertices by random flips that lower small degrees."""
    steps = 0
    while len(surface.vertices()) > target and steps < max_steps:
        steps += 1
        moved = False
        for v in surface.vertices():
            if surface.contract(v):
                moved = True
                break
        if moved:
            continue
        degs = surface.degrees()
        # flip a random edge, preferring flips that reduce the degree of a
        # low-degree vertex's neighborhood
        edges = surface.live_edges()
        rng.shuffle(edges)
        best = None
        for e in edges[:60]:
            plan = surface.flippable(e)
            if plan is None:
                continue
            gain = degs[e[0]] + degs[e[1]]
            noise = rng.random() * 4
            if best is None or gain + noise > best[0]:
                best = (gain + noise, e)
        if best is None:
            return False
        surface.flip(best[1])
    return len(surface.vertices()) <= target


def anneal_degree_stat(surface, target, rng, max_steps=400000):
    cur = degree_stat(surface)
    for step in range(max_steps):
        if cur == target:
            return True
        edges = surface.live_edges()
        e = edges[rng.randrange(len(edges))]
        plan = surface.flippable(e)
        if plan is None:
            continue
        surface.flip(e)
        new = degree_stat(surface)
        temp = max(0.2, 3.0 * (1 - step / max_steps))
        if abs(new - target) <= abs(cur - target) or rng.random() < pow(
            2.718, -(abs(new - target) - abs(cur - target)) / temp
        ):
            cur = new
        else:
            back = tuple(sorted(set(plan[2]) & set(plan[3])))
            surface.flip(back)
            cur = degree_stat(surface)
    return cur == target


def build_genus(g, seed=11):
    rng = random.Random(seed)
    tris = CSASZAR
    for _ in range(g - 1):
        tris = connected_sum(tris, CSASZAR)
    n_target, stat_target = TARGETS[g]
    for attempt in range(40):
        surface = Surface(tris)
        if not reduce_vertices(surface, n_target, rng):
            continue
        final = relabel_contiguous(sorted(surface.tris))
        surface = Surface(final)
        if not anneal_degree_stat(surface, stat_target, rng):
            continue
        out = relabel_contiguous(sorted(surface.tris))
        if not (is_surface(out) and is_orientable(out)):
            continue
        if genus_closed_orientable(out) != g:
            continue
        if degree_stat(Surface(out)) != stat_target:
            continue
        return out
    raise RuntimeError(f"genus {g}: no triangulation found")


def main():
    genera = [int(a) for a in sys.argv[1:]] or [2, 3, 4, 5, 6]
    for g in genera:
        tris = build_genus(g)
        surface = Surface(tris)
        n = len(surface.vertices())
        name = f"m{g}-{n}"
        fname = f"src/realizability/data/m{g}_{n}.json"
        doc = {
            "name": name,
            "description": (
                f"orientable genus-{g} surface, {n} vertices, generated by "
                f"bistellar flips (seed 11), degree statistic "
                f"{degree_stat(surface)}"
            ),
            "num_vertices": n,
            "facets": [list(t) for t in tris],
        }
        with open(fname, "w") as fh:
            json.dump(doc, fh, indent=1)
        print(
            f"genus {g}: wrote {fname} (chi={euler_characteristic(tris)}, "
            f"degstat={degree_stat(surface)}, f=({n},{len(Surface(tris).live_edges())},{len(tris)}))"
        )


if __name__ == "__main__":
    main()
