"""Integer linear models: bounded integer variables plus linear rows.

A row is a named linear expression with integer lower/upper limits; an
equality has lo == hi, a one-sided inequality leaves the other end None.
Two-sided rows count as a single constraint (matching how MILP solvers
report ranged constraints).
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Variable:
    name: str
    lb: int
    ub: int

    def __post_init__(self):
        if self.lb > self.ub:
            raise ValueError(f"empty bounds for {self.name}: [{self.lb}, {self.ub}]")


@dataclass(frozen=True)
class Row:
    name: str
    coeffs: tuple  # ((var_name, coeff), ...), coeff nonzero
    lo: object = None  # int or None
    hi: object = None

    @property
    def relation(self):
        if self.lo is not None and self.lo == self.hi:
            return "="
        if self.lo is None:
            return "<="
        if self.hi is None:
            return ">="
        return "range"


@dataclass
class Model:
    name: str = ""
    variables: list = field(default_factory=list)
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)
    # bookkeeping from presolve: (var, ((name, coeff), ...), const) meaning
    # var = const + sum(coeff * name), applied in reverse order
    substitutions: list = field(default_factory=list)

    def add_variable(self, name, lb, ub):
        self.variables.append(Variable(name, lb, ub))

    def add_row(self, name, coeffs, lo=None, hi=None):
        items = tuple((v, c) for v, c in coeffs if c != 0)
        self.rows.append(Row(name, items, lo, hi))

    def variable_names(self):
        return [v.name for v in self.variables]

    def check(self):
        declared = {v.name for v in self.variables}
        for row in self.rows:
            for name, _ in row.coeffs:
                if name not in declared:
                    raise ValueError(f"row {row.name} references unknown {name}")
        return True

    def report(self):
        out = {
            "variables": len(self.variables),
            "rows": len(self.rows),
        }
        out.update(self.meta)
        return out
