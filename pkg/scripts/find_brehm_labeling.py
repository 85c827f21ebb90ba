"""Search vertex labelings of the reconstructed Moebius strip for one whose
minimal obstruction system is integer infeasible.

The combinatorial type is fixed (boundary-triangle Moebius band, 510
deleted-product cells, 426-row minimal system); whether the system refutes
realizability depends on the labeling because the reference map and the
bound exponents do. Realizability itself does not, so any labeling that
yields an infeasible system is a valid certificate.

Usage: python scripts/find_brehm_labeling.py [n_samples] [time_per_solve]
"""

from __future__ import annotations

import random
import sys


sys.path.insert(0, "src")

from realizability.ilp import solve
from realizability.simplicial import SimplicialComplex
from realizability.system_builder import SystemConfig, build

FACETS = [
    (0, 1, 3), (0, 1, 4), (0, 2, 3), (0, 2, 8), (0, 4, 7),
    (0, 6, 7), (0, 6, 8), (1, 3, 7), (1, 4, 6), (1, 6, 7),
    (2, 3, 5), (3, 4, 6), (3, 4, 7), (3, 5, 6), (5, 6, 8),
]


def relabel(facets, perm):
    return [tuple(sorted(perm[v] for v in t)) for t in facets]


def try_labeling(perm, limit):
    k = SimplicialComplex.from_facets(
        relabel(FACETS, perm), num_vertices=9, name="moebius"
    )
    model = build(k, 3, SystemConfig(preset="minimal", symmetry_reduction=True))
    verdict = solve(model, time_limit=limit)
    return verdict, k


def main():
    n_samples = int(sys.argv[1]) if len(sys.argv) > 1 else 300
    limit = float(sys.argv[2]) if len(sys.argv) > 2 else 20.0
    rng = random.Random(2024)
    tried = 0
    slow = []
    ident = list(range(9))
    cands = [ident]
    while len(cands) < n_samples:
        p = ident[:]
        rng.shuffle(p)
        cands.append(p)
    for perm in cands:
        tried += 1
        verdict, k = try_labeling(perm, limit)
        tag = {"feasible": ".", "infeasible": "INFEASIBLE", "timeout": "t"}[
            verdict.status
        ]
        if verdict.status == "infeasible":
            print(f"\n[{tried}] perm={perm}")
            print("facets =", sorted(map(tuple, k.facets)))
            print("nodes =", verdict.stats.get("nodes"))
            return
        if verdict.status == "timeout":
            slow.append(perm)
        print(tag, end="", flush=True)
    print(f"\nno infeasible labeling in {tried} samples; {len(slow)} timeouts")
    for perm in slow[:10]:
        print("slow:", perm)


if __name__ == "__main__":
    main()
