"""Assemble the obstruction system of a complex K and target dimension m.

The unknowns are the values of an integer cochain on the dimension-(m-1)
cells of the deleted product; a geometric realization of K would make the
system feasible, so integer infeasibility certifies non-realizability.

Sign convention: the cochain is the deformation cochain *from the moment
map to the hypothetical embedding*, i.e. the coboundary equations read
delta(lambda) = -phi_c and the ranged rows are centered at -phi_c. The
bipyramid end-to-end oracle test pins this convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .cyclic import moment_cocycle
from .deleted_product import (
    canonicalize,
    cells,
    cells_full,
    coboundary_row,
    encode_cell,
    symmetry_sign,
)
from .model import Model
from .simplicial import sort_key

PRESETS = ("full", "novik", "minimal", "sub_y", "sub_subsets")


def ell(j, k):
    """Number of non-minimal elements of J lying in {1, ..., k}."""
    j = tuple(sorted(j))
    return sum(1 for v in j[1:] if 1 <= v <= k)


def shuffle_sign(tau_plus, tau_minus):
    """Parity of merging the two sorted blocks back into sorted order."""
    seq = list(tau_plus) + list(tau_minus)
    if set(tau_plus) & set(tau_minus):
        raise ValueError("blocks not disjoint")
    if min(seq) not in tau_plus:
        raise ValueError("minimum must lie in the first block")
    inv = sum(
        1
        for a in range(len(seq))
        for b in range(a + 1, len(seq))
        if seq[a] > seq[b]
    )
    return -1 if inv % 2 else 1


def partition_family(j):
    """All ordered bipartitions (tau+, tau-) of J with min(J) in tau+.

    These are the (m-1)-cells with vertex set exactly J; there are
    2^m - 1 of them for |J| = m+1.
    """
    j = tuple(sorted(j))
    head, rest = j[0], j[1:]
    out = []
    for mask in range(1, 2 ** len(rest)):
        plus = (head,) + tuple(v for i, v in enumerate(rest) if not mask >> i & 1)
        minus = tuple(v for i, v in enumerate(rest) if mask >> i & 1)
        out.append((plus, minus))
    out.sort(key=lambda c: (sort_key(c[0]), sort_key(c[1])))
    return out


@dataclass(frozen=True)
class SystemConfig:
    preset: str = "full"
    symmetry_reduction: bool = True
    expand_absolute: bool = False
    subset_policy: str = "small"  # singletons (as bounds), pairs, full set

    def __post_init__(self):
        if self.preset not in PRESETS:
            raise ValueError(f"unknown preset {self.preset!r}")


def _index2_bounds(m, lj, sgn):
    lo = -((m - lj + 1) // 2)
    hi = (m - lj) // 2
    if sgn < 0:
        lo, hi = -hi, -lo
    return lo, hi


def build(k, m, cfg):
    """Build the obstruction model for complex k in dimension m."""
    if m < 2:
        raise ValueError("target dimension must be at least 2")
    n = k.num_vertices - 1
    if n + 1 < m + 2:
        raise ValueError("complex needs at least m+2 vertices")

    full_scope = cfg.preset == "full"
    if full_scope:
        var_cells = cells_full(n, m - 1, m)
        mcells = cells_full(n, m, m)
    else:
        var_cells = cells(k, m - 1)
        mcells = cells(k, m)
    canon_cells = [c for c in var_cells if c[0][0] < c[1][0]]
    kcell_set = set(cells(k, m - 1))

    model = Model(name=f"{k.name or 'complex'}_m{m}_{cfg.preset}")
    model.meta = {
        "complex": k.name,
        "m": m,
        "preset": cfg.preset,
        "symmetry_reduction": cfg.symmetry_reduction,
    }

    def var_of(cell):
        """Variable name and coefficient sign for a cell's value."""
        if cfg.symmetry_reduction:
            canon, sgn = canonicalize(cell)
            return "l_" + encode_cell(canon), sgn
        return "l_" + encode_cell(cell), 1

    # ---- variable bounds -------------------------------------------------
    bounds = {}
    if cfg.preset == "novik":
        half = (m + 1) // 2
        for c in canon_cells:
            bounds[c] = (-half, half)
    else:
        for c in canon_cells:
            j = tuple(sorted(c[0] + c[1]))
            lj = ell(j, m)
            bounds[c] = _index2_bounds(m, lj, shuffle_sign(c[0], c[1]))

    declared = canon_cells if cfg.symmetry_reduction else var_cells
    for c in declared:
        if c[0][0] < c[1][0]:
            lo, hi = bounds[c]
        else:
            canon, sgn = canonicalize(c)
            lo, hi = bounds[canon]
            if sgn < 0:
                lo, hi = -hi, -lo
        model.add_variable("l_" + encode_cell(c), lo, hi)

    # ---- part 1: symmetries (explicit rows only without reduction) ------
    if not cfg.symmetry_reduction:
        for c in canon_cells:
            swapped = (c[1], c[0])
            model.add_row(
                "sym_" + encode_cell(swapped),
                [("l_" + encode_cell(swapped), 1), ("l_" + encode_cell(c), -symmetry_sign(c))],
                lo=0,
                hi=0,
            )

    # ---- part 2: per-J deformation inequalities --------------------------
    if cfg.preset in ("full", "sub_y", "sub_subsets"):
        aux_added = set()
        for j in combinations(range(n + 1), m + 1):
            fam = partition_family(j)
            if full_scope:
                members = fam
            else:
                members = [c for c in fam if c in kcell_set]
                if not members:
                    continue
            lj = ell(j, m)
            jname = "_".join(map(str, j))
            rest = len(fam) - len(members)
            yname = None
            if cfg.preset == "sub_y" and rest:
                yname = f"y_{jname}"
                ylo, yhi = _index2_bounds(m, lj, 1)
                model.add_variable(yname, ylo, yhi)

            # 2(b) signed-sum row
            coeffs = [(var_of(c)[0], shuffle_sign(c[0], c[1]) * var_of(c)[1]) for c in members]
            if yname:
                coeffs.append((yname, 1))
            if cfg.preset in ("full", "sub_y"):
                model.add_row(f"sgn_{jname}", coeffs, lo=-1, hi=0)

            # 2(a) absolute-value row
            if cfg.preset == "sub_subsets" and cfg.expand_absolute:
                _expand_absolute_rows(model, jname, members, var_of, m - lj)
            else:
                terms = []
                for c in members:
                    vname, vsgn = var_of(c)
                    aname = "a_" + vname[2:]
                    if aname not in aux_added:
                        aux_added.add(aname)
                        model.add_variable(aname, 0, (m + 1) // 2)
                        model.add_row(f"absp_{vname[2:]}", [(aname, 1), (vname, -vsgn)], lo=0)
                        model.add_row(f"absn_{vname[2:]}", [(aname, 1), (vname, vsgn)], lo=0)
                    terms.append((aname, 1))
                if yname:
                    ay = "a_" + yname
                    model.add_variable(ay, 0, (m + 1) // 2)
                    model.add_row(f"absp_{yname}", [(ay, 1), (yname, -1)], lo=0)
                    model.add_row(f"absn_{yname}", [(ay, 1), (yname, 1)], lo=0)
                    terms.append((ay, 1))
                model.add_row(f"pts_{jname}", terms, hi=m - lj)

            # subset rows for Subsystem 2
            if cfg.preset == "sub_subsets":
                lo = -((m - lj + 1) // 2)
                hi = (m - lj) // 2
                subsets = [members] if len(members) > 2 else []
                subsets += [list(p) for p in combinations(members, 2)]
                for idx, sub in enumerate(subsets):
                    coeffs = [
                        (var_of(c)[0], shuffle_sign(c[0], c[1]) * var_of(c)[1])
                        for c in sub
                    ]
                    model.add_row(f"sub_{jname}_{idx}", coeffs, lo=lo, hi=hi)

    # ---- part 3(a): intersection inequalities over the full product -----
    if full_scope:
        for c in mcells:
            if c[0][0] > c[1][0]:
                continue  # the swapped row is equivalent via part 1
            phi = moment_cocycle(c, m)
            coeffs = _cochain_coboundary_coeffs(c, var_of)
            model.add_row(
                "ix_" + encode_cell(c), coeffs, lo=-phi - 1, hi=-phi + 1
            )

    # ---- part 3(b): linking inequalities ---------------------------------
    if cfg.preset != "novik":
        if full_scope:
            sigmas = list(combinations(range(n + 1), m))
            taus = list(combinations(range(n + 1), 3))
        else:
            sigmas = list(k.faces_of_dim(m - 1))
            taus = list(k.faces_of_dim(2))
        for s in sigmas:
            sset = set(s)
            for t in taus:
                if sset & set(t):
                    continue
                if m == 3 and s > t:
                    continue  # swapped pair gives the identical row
                phi_link = 0
                coeffs = {}
                for jdx in range(3):
                    tj = t[:jdx] + t[jdx + 1 :]
                    jsign = -1 if jdx % 2 else 1
                    phi_link += jsign * moment_cocycle((s, tj), m)
                    for idx in range(m):
                        si = s[:idx] + s[idx + 1 :]
                        isign = -1 if idx % 2 else 1
                        vname, vsgn = var_of((si, tj))
                        key = vname
                        coeffs[key] = coeffs.get(key, 0) + isign * jsign * vsgn
                row = [(v, cf) for v, cf in sorted(coeffs.items()) if cf != 0]
                model.add_row(
                    "lnk_" + encode_cell((s, t)),
                    row,
                    lo=-phi_link - 1,
                    hi=-phi_link + 1,
                )

    # ---- part 4: coboundary equations on the complex ---------------------
    kmcells = mcells if not full_scope else cells(k, m)
    for c in kmcells:
        if c[0][0] > c[1][0]:
            continue
        phi = moment_cocycle(c, m)
        coeffs = _cochain_coboundary_coeffs(c, var_of)
        model.add_row("cob_" + encode_cell(c), coeffs, lo=-phi, hi=-phi)

    model.meta["variables"] = len(model.variables)
    model.meta["rows"] = len(model.rows)
    model.check()
    return model


def _cochain_coboundary_coeffs(c, var_of):
    coeffs = {}
    for face, sgn in coboundary_row(c):
        vname, vsgn = var_of(face)
        coeffs[vname] = coeffs.get(vname, 0) + sgn * vsgn
    return [(v, cf) for v, cf in sorted(coeffs.items()) if cf != 0]


def _expand_absolute_rows(model, jname, members, var_of, bound):
    """All sign patterns of sum |lambda| <= bound, without new variables."""
    names = [var_of(c) for c in members]
    for mask in range(2 ** len(names)):
        coeffs = [
            (vname, (-1 if mask >> i & 1 else 1) * vsgn)
            for i, (vname, vsgn) in enumerate(names)
        ]
        model.add_row(f"pts_{jname}_{mask}", coeffs, hi=bound)
