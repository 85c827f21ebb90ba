"""Validation helpers for triangulated surfaces (with or without boundary).

Used to sanity-check instance data files and by the generation scripts:
link conditions, orientability, Euler characteristic, boundary structure.
"""

from __future__ import annotations

from collections import defaultdict


def edge_triangle_map(triangles):
    out = defaultdict(list)
    for t in triangles:
        for i in range(3):
            e = tuple(sorted((t[i], t[(i + 1) % 3])))
            out[e].append(t)
    return out


def boundary_edges(triangles):
    return sorted(e for e, ts in edge_triangle_map(triangles).items() if len(ts) == 1)


def is_surface(triangles, allow_boundary=False):
    """Every edge in <= 2 triangles and every vertex link a single path or
    cycle (cycle only, unless boundary is allowed)."""
    em = edge_triangle_map(triangles)
    if any(len(ts) > 2 for ts in em.values()):
        return False
    if not allow_boundary and any(len(ts) == 1 for ts in em.values()):
        return False
    verts = sorted({v for t in triangles for v in t})
    for v in verts:
        star = [t for t in triangles if v in t]
        if not star:
            return False
        # link graph: the opposite edges of the star triangles
        adj = defaultdict(set)
        nodes = set()
        for t in star:
            a, b = sorted(u for u in t if u != v)
            adj[a].add(b)
            adj[b].add(a)
            nodes.update((a, b))
        degs = [len(adj[u]) for u in nodes]
        if any(d > 2 for d in degs):
            return False
        ends = sum(1 for d in degs if d == 1)
        if ends not in (0, 2):
            return False
        if ends == 2 and not allow_boundary:
            return False
        # connectivity of the link
        seen = set()
        stack = [next(iter(nodes))]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u] - seen)
        if seen != nodes:
            return False
        # path length must use all star triangles (no pinch)
        if len(star) != (len(nodes) - 1 if ends == 2 else len(nodes)):
            return False
    return _connected(triangles)


def _connected(triangles):
    adj = defaultdict(set)
    for t in triangles:
        for a in t:
            for b in t:
                if a != b:
                    adj[a].add(b)
    verts = sorted(adj)
    seen = set()
    stack = [verts[0]]
    while stack:
        u = stack.pop()
        if u in seen:
            continue
        seen.add(u)
        stack.extend(adj[u] - seen)
    return len(seen) == len(verts)


def is_orientable(triangles):
    """Try to orient all triangles coherently across interior edges."""
    em = edge_triangle_map(triangles)
    index = {tuple(t): i for i, t in enumerate(map(tuple, triangles))}
    orient = {}

    def edges_oriented(t, flip):
        a, b, c = t
        cyc = [(a, b), (b, c), (c, a)]
        if flip:
            cyc = [(b, a), (c, b), (a, c)]
        return cyc

    for start in index:
        if start in orient:
            continue
        orient[start] = False
        stack = [start]
        while stack:
            t = stack.pop()
            for e, ts in [(tuple(sorted((t[i], t[(i + 1) % 3]))), None) for i in range(3)]:
                for u in em[e]:
                    u = tuple(u)
                    if u == t:
                        continue
                    # induced orientations on the shared edge must be opposite
                    t_dir = None
                    for d in edges_oriented(t, orient[t]):
                        if tuple(sorted(d)) == e:
                            t_dir = d
                    need_flip = None
                    for flip in (False, True):
                        for d in edges_oriented(u, flip):
                            if tuple(sorted(d)) == e:
                                if d == (t_dir[1], t_dir[0]):
                                    need_flip = flip
                    if need_flip is None:
                        return False
                    if u in orient:
                        if orient[u] != need_flip:
                            return False
                    else:
                        orient[u] = need_flip
                        stack.append(u)
    return True


def euler_characteristic(triangles):
    verts = {v for t in triangles for v in t}
    edges = set(edge_triangle_map(triangles))
    return len(verts) - len(edges) + len(triangles)


def genus_closed_orientable(triangles):
    assert is_surface(triangles) and is_orientable(triangles)
    return (2 - euler_characteristic(triangles)) // 2


def is_moebius_strip(triangles):
    """Surface with boundary, non-orientable, Euler characteristic 0,
    single boundary circle."""
    if not is_surface(triangles, allow_boundary=True):
        return False
    if is_orientable(triangles):
        return False
    if euler_characteristic(triangles) != 0:
        return False
    bed = boundary_edges(triangles)
    if not bed:
        return False
    adj = defaultdict(set)
    for a, b in bed:
        adj[a].add(b)
        adj[b].add(a)
    if any(len(s) != 2 for s in adj.values()):
        return False
    start = bed[0][0]
    seen = {start}
    cur, prev = next(iter(adj[start])), start
    while cur != start:
        seen.add(cur)
        nxt = next(u for u in adj[cur] if u != prev)
        prev, cur = cur, nxt
    return len(seen) == len(adj)
