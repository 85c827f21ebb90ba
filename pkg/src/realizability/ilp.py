"""Exact integer feasibility: presolve, depth-first search, LP export.

Verdicts are certificates: a Feasible verdict carries an assignment that
verifies exactly, and Infeasible is only reported after the search tree
is exhausted. All arithmetic is integer (pivots in the equality
elimination are restricted to unit coefficients, which preserves the
integer solution set in both directions).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from .model import Model, Row


@dataclass
class Verdict:
    status: str  # "feasible" | "infeasible" | "timeout"
    assignment: dict = None
    stats: dict = field(default_factory=dict)

    @property
    def feasible(self):
        return self.status == "feasible"

    @property
    def infeasible(self):
        return self.status == "infeasible"

    def to_dict(self):
        return {
            "verdict": self.status,
            "assignment": self.assignment,
            "stats": self.stats,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def verify(model, assignment):
    """Exact check of an assignment against every bound and row."""
    names = {v.name for v in model.variables}
    for name in assignment:
        if name not in names:
            raise ValueError(f"unknown variable in assignment: {name}")
    for v in model.variables:
        if v.name not in assignment:
            return False
        val = assignment[v.name]
        if not isinstance(val, int) or not v.lb <= val <= v.ub:
            return False
    for row in model.rows:
        total = sum(c * assignment[name] for name, c in row.coeffs)
        if row.lo is not None and total < row.lo:
            return False
        if row.hi is not None and total > row.hi:
            return False
    return True


# ---------------------------------------------------------------------------
# presolve


def _ceil_div(a, b):
    return -((-a) // b)


def _floor_div(a, b):
    return a // b


class _Work:
    """Mutable solver state: interval domains and coefficient rows."""

    def __init__(self, model):
        self.names = [v.name for v in model.variables]
        self.index = {n: i for i, n in enumerate(self.names)}
        self.lo = [v.lb for v in model.variables]
        self.hi = [v.ub for v in model.variables]
        self.rows = []  # (dict idx->coeff, lo, hi)
        for row in model.rows:
            coeffs = {}
            for name, c in row.coeffs:
                coeffs[self.index[name]] = coeffs.get(self.index[name], 0) + c
            coeffs = {i: c for i, c in coeffs.items() if c != 0}
            self.rows.append([coeffs, row.lo, row.hi])
        self.infeasible = False
        self.substitutions = []  # (name, ((name, coeff), ...), const)
        self.normalize_rows()

    def normalize_rows(self):
        """Divide each row by the gcd of its coefficients.

        Sound for integer variables: bounds round inward; an equality with
        indivisible right-hand side is a contradiction.
        """
        from math import gcd

        for row in self.rows:
            coeffs, rlo, rhi = row
            if not coeffs:
                if (rlo is not None and rlo > 0) or (rhi is not None and rhi < 0):
                    self.infeasible = True
                continue
            g = 0
            for c in coeffs.values():
                g = gcd(g, abs(c))
            if g <= 1:
                continue
            row[0] = {i: c // g for i, c in coeffs.items()}
            row[1] = None if rlo is None else _ceil_div(rlo, g)
            row[2] = None if rhi is None else _floor_div(rhi, g)
            if row[1] is not None and row[2] is not None and row[1] > row[2]:
                self.infeasible = True

    def propagate(self):
        """Interval propagation to a fixed point. False on wipeout."""
        dirty = set(range(len(self.rows)))
        var_rows = {}
        for ridx, (coeffs, _, _) in enumerate(self.rows):
            for i in coeffs:
                var_rows.setdefault(i, set()).add(ridx)
        while dirty:
            ridx = dirty.pop()
            coeffs, rlo, rhi = self.rows[ridx]
            amin = amax = 0
            for i, c in coeffs.items():
                if c > 0:
                    amin += c * self.lo[i]
                    amax += c * self.hi[i]
                else:
                    amin += c * self.hi[i]
                    amax += c * self.lo[i]
            if (rhi is not None and amin > rhi) or (rlo is not None and amax < rlo):
                self.infeasible = True
                return False
            for i, c in coeffs.items():
                if c > 0:
                    tmin, tmax = c * self.lo[i], c * self.hi[i]
                else:
                    tmin, tmax = c * self.hi[i], c * self.lo[i]
                rest_min, rest_max = amin - tmin, amax - tmax
                new_lo, new_hi = self.lo[i], self.hi[i]
                if rhi is not None:
                    lim = rhi - rest_min  # c * x <= lim
                    if c > 0:
                        new_hi = min(new_hi, _floor_div(lim, c))
                    else:
                        new_lo = max(new_lo, _ceil_div(lim, c))
                if rlo is not None:
                    lim = rlo - rest_max  # c * x >= lim
                    if c > 0:
                        new_lo = max(new_lo, _ceil_div(lim, c))
                    else:
                        new_hi = min(new_hi, _floor_div(lim, c))
                if new_lo > new_hi:
                    self.infeasible = True
                    return False
                if new_lo != self.lo[i] or new_hi != self.hi[i]:
                    self.lo[i], self.hi[i] = new_lo, new_hi
                    dirty.update(var_rows.get(i, ()))
        return True

    def eliminate_equalities(self):
        """Remove equality rows by unit-coefficient pivots.

        The pivot variable becomes an integer expression in the others, so
        integer feasibility is preserved exactly; the pivot's bounds turn
        into a ranged row on the expression.
        """
        occurrences = {}
        for coeffs, _, _ in self.rows:
            for i in coeffs:
                occurrences[i] = occurrences.get(i, 0) + 1
        eliminated = set()
        for ridx in range(len(self.rows)):
            coeffs, rlo, rhi = self.rows[ridx]
            if rlo is None or rlo != rhi or not coeffs:
                continue
            pivot = None
            for i, c in sorted(coeffs.items()):
                if abs(c) == 1 and i not in eliminated:
                    if pivot is None or occurrences.get(i, 0) < occurrences.get(pivot, 0):
                        pivot = i
            if pivot is None:
                continue
            c = coeffs[pivot]
            rest = {i: v for i, v in coeffs.items() if i != pivot}
            # x = c*rhs - sum(c * a_i * x_i)
            expr = {i: -c * a for i, a in rest.items()}
            const = c * rlo
            self.substitutions.append(
                (
                    self.names[pivot],
                    tuple((self.names[i], a) for i, a in sorted(expr.items())),
                    const,
                )
            )
            eliminated.add(pivot)
            self.rows[ridx] = [{}, 0, 0]
            for other in self.rows:
                ocoeffs = other[0]
                b = ocoeffs.pop(pivot, 0)
                if not b:
                    continue
                for i, a in expr.items():
                    nv = ocoeffs.get(i, 0) + b * a
                    if nv:
                        ocoeffs[i] = nv
                    else:
                        ocoeffs.pop(i, None)
                if other[1] is not None:
                    other[1] -= b * const
                if other[2] is not None:
                    other[2] -= b * const
            # pivot bounds become a row on the expression
            self.rows.append(
                [dict(expr), self.lo[pivot] - const, self.hi[pivot] - const]
            )
            self.lo[pivot], self.hi[pivot] = 0, 0  # placeholder, excluded from search
        self.eliminated = eliminated
        kept = []
        for coeffs, rlo, rhi in self.rows:
            if not coeffs:
                if (rlo is not None and rlo > 0) or (rhi is not None and rhi < 0):
                    self.infeasible = True
            else:
                kept.append([coeffs, rlo, rhi])
        self.rows = kept
        return True

    def cleanup(self):
        """Drop rows that can never bind."""
        kept = []
        for coeffs, rlo, rhi in self.rows:
            if not coeffs:
                if (rlo is not None and rlo > 0) or (rhi is not None and rhi < 0):
                    self.infeasible = True
                continue
            amin = amax = 0
            for i, c in coeffs.items():
                if c > 0:
                    amin += c * self.lo[i]
                    amax += c * self.hi[i]
                else:
                    amin += c * self.hi[i]
                    amax += c * self.lo[i]
            lo_ok = rlo is None or amin >= rlo
            hi_ok = rhi is None or amax <= rhi
            if lo_ok and hi_ok:
                continue
            kept.append([coeffs, rlo, rhi])
        self.rows = kept


def presolve(model):
    """Equality elimination plus bound propagation, exactly.

    Returns a reduced Model; meta["presolve_infeasible"] is set when a
    contradiction was detected. Substitutions for the eliminated
    variables are recorded on the result for back-substitution.
    """
    work = _Work(model)
    if not work.infeasible:
        work.eliminate_equalities()
        work.normalize_rows()
        if not work.infeasible and work.propagate():
            work.cleanup()
    out = Model(name=model.name + "_presolved")
    out.meta = dict(model.meta)
    out.meta["presolve_infeasible"] = work.infeasible
    eliminated = getattr(work, "eliminated", set())
    for i, name in enumerate(work.names):
        if i in eliminated:
            continue
        lo = max(work.lo[i], -(10**18))
        hi = min(work.hi[i], 10**18)
        if lo > hi:
            out.meta["presolve_infeasible"] = True
            lo = hi = 0
        out.add_variable(name, lo, hi)
    for idx, (coeffs, rlo, rhi) in enumerate(work.rows):
        out.add_row(
            f"r{idx}",
            [(work.names[i], c) for i, c in sorted(coeffs.items())],
            lo=rlo,
            hi=rhi,
        )
    out.substitutions = list(work.substitutions)
    return out


# ---------------------------------------------------------------------------
# search


def solve(model, time_limit=None, node_limit=None):
    """Decide integer feasibility by DFS with interval propagation.

    Branches on the variable with the smallest current domain (ties:
    most row memberships, then name order); values are tried from zero
    outward. Deterministic for fixed input.
    """
    t0 = time.monotonic()
    for v in model.variables:
        if not isinstance(v.lb, int) or not isinstance(v.ub, int):
            raise ValueError(f"variable {v.name} must have finite integer bounds")
    reduced = presolve(model)
    stats = {
        "nodes": 0,
        "presolve_rows": len(reduced.rows),
        "presolve_vars": len(reduced.variables),
    }
    if reduced.meta.get("presolve_infeasible"):
        stats["elapsed"] = time.monotonic() - t0
        return Verdict("infeasible", stats=stats)

    work = _Work(reduced)
    if not work.propagate():
        stats["elapsed"] = time.monotonic() - t0
        return Verdict("infeasible", stats=stats)

    nvars = len(work.names)
    lo, hi = work.lo, work.hi
    # flat row arrays for the hot propagation loop
    row_vars = []
    row_coeffs = []
    row_lo = []
    row_hi = []
    membership = [0] * nvars
    var_rows = [[] for _ in range(nvars)]
    for coeffs, rlo, rhi in work.rows:
        ridx = len(row_vars)
        items = sorted(coeffs.items())
        row_vars.append([i for i, _ in items])
        row_coeffs.append([c for _, c in items])
        row_lo.append(rlo)
        row_hi.append(rhi)
        for i, _ in items:
            membership[i] += 1
            var_rows[i].append(ridx)

    trail = []

    def undo(mark):
        while len(trail) > mark:
            i, a, b = trail.pop()
            lo[i], hi[i] = a, b

    def propagate_from(seed_rows):
        dirty = list(seed_rows)
        in_queue = set(dirty)
        while dirty:
            ridx = dirty.pop()
            in_queue.discard(ridx)
            rvars = row_vars[ridx]
            rcoef = row_coeffs[ridx]
            rlo = row_lo[ridx]
            rhi = row_hi[ridx]
            amin = amax = 0
            for i, c in zip(rvars, rcoef):
                if c > 0:
                    amin += c * lo[i]
                    amax += c * hi[i]
                else:
                    amin += c * hi[i]
                    amax += c * lo[i]
            if (rhi is not None and amin > rhi) or (rlo is not None and amax < rlo):
                return False
            for i, c in zip(rvars, rcoef):
                li, hii = lo[i], hi[i]
                if li == hii:
                    continue
                if c > 0:
                    tmin, tmax = c * li, c * hii
                else:
                    tmin, tmax = c * hii, c * li
                rest_min, rest_max = amin - tmin, amax - tmax
                new_lo, new_hi = li, hii
                if rhi is not None:
                    lim = rhi - rest_min
                    if c > 0:
                        new_hi = min(new_hi, lim // c)
                    else:
                        new_lo = max(new_lo, -((-lim) // c))
                if rlo is not None:
                    lim = rlo - rest_max
                    if c > 0:
                        new_lo = max(new_lo, -((-lim) // c))
                    else:
                        new_hi = min(new_hi, lim // c)
                if new_lo > new_hi:
                    return False
                if new_lo != li or new_hi != hii:
                    trail.append((i, li, hii))
                    lo[i], hi[i] = new_lo, new_hi
                    for r in var_rows[i]:
                        if r not in in_queue:
                            in_queue.add(r)
                            dirty.append(r)
        return True

    deadline = None if time_limit is None else t0 + time_limit

    class _Stop(Exception):
        pass

    free = [i for i in range(nvars) if lo[i] < hi[i]]

    def pick():
        best = None
        key = None
        for i in free:
            size = hi[i] - lo[i]
            if size == 0:
                continue
            k = (size, -membership[i], i)
            if key is None or k < key:
                best, key = i, k
        return best

    def dfs():
        stats["nodes"] += 1
        if stats["nodes"] % 256 == 0:
            if deadline is not None and time.monotonic() > deadline:
                raise _Stop
            if node_limit is not None and stats["nodes"] > node_limit:
                raise _Stop
        i = pick()
        if i is None:
            return True
        values = sorted(range(lo[i], hi[i] + 1), key=lambda v: (abs(v), v < 0))
        for val in values:
            mark = len(trail)
            trail.append((i, lo[i], hi[i]))
            lo[i] = hi[i] = val
            if propagate_from(var_rows[i]) and dfs():
                return True
            undo(mark)
        return False

    try:
        found = dfs()
    except _Stop:
        stats["elapsed"] = time.monotonic() - t0
        return Verdict("timeout", stats=stats)

    stats["elapsed"] = time.monotonic() - t0
    if not found:
        return Verdict("infeasible", stats=stats)

    assignment = {name: lo[i] for i, name in enumerate(work.names)}
    for name, expr, const in reversed(reduced.substitutions):
        assignment[name] = const + sum(c * assignment[v] for v, c in expr)
    if not verify(model, assignment):
        raise AssertionError("internal error: solution failed verification")
    return Verdict("feasible", assignment=assignment, stats=stats)


# ---------------------------------------------------------------------------
# LP export


def export_lp(model):
    """CPLEX-LP text with a zero objective; byte-stable for fixed input.

    Ranged rows are written as a pair of inequalities with _lo/_hi name
    suffixes.
    """
    lines = [f"\\ model {model.name}" if model.name else "\\ model"]
    lines.append("Minimize")
    lines.append(" obj:")
    lines.append("Subject To")
    for row in model.rows:
        expr = " ".join(
            f"{'+' if c > 0 else '-'} {abs(c)} {name}" for name, c in row.coeffs
        )
        rel = row.relation
        if rel == "=":
            lines.append(f" {row.name}: {expr} = {row.lo}")
        elif rel == "<=":
            lines.append(f" {row.name}: {expr} <= {row.hi}")
        elif rel == ">=":
            lines.append(f" {row.name}: {expr} >= {row.lo}")
        else:
            lines.append(f" {row.name}_lo: {expr} >= {row.lo}")
            lines.append(f" {row.name}_hi: {expr} <= {row.hi}")
    lines.append("Bounds")
    for v in model.variables:
        lines.append(f" {v.lb} <= {v.name} <= {v.ub}")
    lines.append("Generals")
    names = model.variable_names()
    for i in range(0, len(names), 8):
        lines.append(" " + " ".join(names[i : i + 8]))
    lines.append("End")
    return "\n".join(lines) + "\n"
