"""Exact two-phase simplex over the rationals with Bland's rule.

Problems have the form ``min c·x`` subject to rows ``a·x (>=|<=|=) b`` and
``x >= 0``.  The tableau is kept after solving so the objective or a
right-hand side can be changed and the optimum recovered from the old basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from ..exact import as_fraction

SENSES = (">=", "<=", "=")

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    sense: str
    rhs: Fraction

    def __post_init__(self):
        if self.sense not in SENSES:
            raise ValueError(f"unknown constraint sense {self.sense!r}")
        object.__setattr__(self, "coeffs", tuple(as_fraction(a) for a in self.coeffs))
        object.__setattr__(self, "rhs", as_fraction(self.rhs))


@dataclass(frozen=True)
class LinearProgram:
    """``min objective·x`` over ``x >= 0`` subject to ``constraints``."""

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(as_fraction(c) for c in self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        for con in self.constraints:
            if len(con.coeffs) != len(self.objective):
                raise ValueError("constraint width does not match the objective")

    @property
    def num_vars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal", "infeasible" or "unbounded"
    value: Fraction | None = None
    x: tuple[Fraction, ...] | None = None
    y: tuple[Fraction, ...] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class InconsistentBasis(Exception):
    """A right-hand side change made a redundant row inconsistent."""


@dataclass
class Tableau:
    """Dense simplex tableau for ``A x = b, x >= 0`` built from a LinearProgram.

    Columns are the original variables, then one slack per inequality, then
    artificials.  ``init[i]`` is the column that started basic in row ``i``;
    it carries ``B^-1 e_i`` throughout, which gives the duals.
    """

    lp: LinearProgram
    rows: list[list[Fraction]] = field(init=False)
    rhs: list[Fraction] = field(init=False)
    basis: list[int] = field(init=False)
    cost: list[Fraction] = field(init=False)
    dj: list[Fraction] = field(init=False)
    pivots: int = field(init=False, default=0)

    def __post_init__(self):
        lp = self.lp
        nx = lp.num_vars
        self.sign = [(-1 if con.rhs < 0 else 1) for con in lp.constraints]
        n_slack = sum(con.sense != "=" for con in lp.constraints)
        self.first_art = nx + n_slack
        body = []
        self.init = []
        self.slack_of = {}
        art_rows = []
        s = nx
        for i, con in enumerate(lp.constraints):
            sg = self.sign[i]
            row = [a * sg for a in con.coeffs] + [_ZERO] * n_slack
            if con.sense != "=":
                coef = (1 if con.sense == "<=" else -1) * sg
                row[s] = Fraction(coef)
                self.slack_of[i] = s
                if coef == 1:
                    self.init.append(s)
                else:
                    self.init.append(None)
                    art_rows.append(i)
                s += 1
            else:
                self.init.append(None)
                art_rows.append(i)
            body.append(row)
        self.width = self.first_art + len(art_rows)
        for row in body:
            row.extend([_ZERO] * len(art_rows))
        for k, i in enumerate(art_rows):
            body[i][self.first_art + k] = Fraction(1)
            self.init[i] = self.first_art + k
        self.rows = body
        self.rhs = [con.rhs * sg for con, sg in zip(lp.constraints, self.sign)]
        self.basis = list(self.init)
        self.cost = [_ZERO] * self.width
        self.dj = [_ZERO] * self.width
        self.objective = lp.objective

    # -- basic operations -------------------------------------------------

    def _eligible(self, j: int) -> bool:
        return j < self.first_art

    def _pivot(self, r: int, c: int) -> None:
        self.pivots += 1
        prow = self.rows[r]
        p = prow[c]
        if p != 1:
            prow = [v / p for v in prow]
            self.rows[r] = prow
            self.rhs[r] /= p
        nz = [j for j, v in enumerate(prow) if v]
        br = self.rhs[r]
        for i, row in enumerate(self.rows):
            if i == r:
                continue
            f = row[c]
            if f:
                for j in nz:
                    row[j] -= f * prow[j]
                self.rhs[i] -= f * br
        f = self.dj[c]
        if f:
            for j in nz:
                self.dj[j] -= f * prow[j]
        self.basis[r] = c

    def set_costs(self, cost: Sequence[Fraction]) -> None:
        """Install a cost vector over all columns and recompute reduced costs."""
        self.cost = list(cost)
        dj = list(self.cost)
        for r, b in enumerate(self.basis):
            cb = self.cost[b]
            if cb:
                for j, v in enumerate(self.rows[r]):
                    if v:
                        dj[j] -= cb * v
        self.dj = dj

    def objective_value(self) -> Fraction:
        return sum((self.cost[b] * v for b, v in zip(self.basis, self.rhs)), _ZERO)

    def primal_simplex(self, allow_art: bool = False) -> str:
        """Bland's rule from a primal feasible basis: "optimal" or "unbounded"."""
        while True:
            enter = next(
                (j for j in range(self.width) if self.dj[j] < 0 and (allow_art or self._eligible(j))),
                None,
            )
            if enter is None:
                return "optimal"
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return "unbounded"
            self._pivot(best[1], enter)

    def dual_simplex(self) -> str:
        """From a dual feasible basis: "optimal" or "infeasible"."""
        while True:
            cand = [(self.basis[i], i) for i in range(len(self.rows)) if self.rhs[i] < 0]
            if not cand:
                return "optimal"
            _, r = min(cand)
            if not self._eligible(self.basis[r]):
                raise InconsistentBasis
            row = self.rows[r]
            best = None
            for j in range(self.first_art):
                a = row[j]
                if a < 0:
                    key = (self.dj[j] / -a, j)
                    if best is None or key < best:
                        best = key
            if best is None:
                return "infeasible"
            self._pivot(r, best[1])

    # -- phases -----------------------------------------------------------

    def phase_one(self) -> bool:
        """Find a feasible basis; False if the program is infeasible."""
        if self.first_art == self.width:
            return True
        self.set_costs([_ZERO] * self.first_art + [Fraction(1)] * (self.width - self.first_art))
        self.primal_simplex(allow_art=True)
        if self.objective_value() != 0:
            return False
        for r in range(len(self.rows)):
            if self._eligible(self.basis[r]):
                continue
            row = self.rows[r]
            j = next((j for j in range(self.first_art) if row[j]), None)
            if j is not None:
                self._pivot(r, j)
        return True

    def phase_two(self, objective: Sequence[Fraction]) -> str:
        self.objective = tuple(as_fraction(c) for c in objective)
        cost = list(self.objective) + [_ZERO] * (self.width - len(objective))
        self.set_costs(cost)
        return self.primal_simplex()

    def set_rhs(self, i: int, value) -> None:
        """Replace the right-hand side of original row ``i``, keeping the basis."""
        value = as_fraction(value)
        delta = (value - self.lp.constraints[i].rhs) * self.sign[i]
        if delta:
            col = self.init[i]
            for r, row in enumerate(self.rows):
                if row[col]:
                    self.rhs[r] += delta * row[col]
        cons = list(self.lp.constraints)
        old = cons[i]
        cons[i] = Constraint(old.coeffs, old.sense, value)
        self.lp = LinearProgram(self.lp.objective, tuple(cons))
        for r, b in enumerate(self.basis):
            if not self._eligible(b) and self.rhs[r] != 0:
                raise InconsistentBasis

    # -- read-out ---------------------------------------------------------

    def primal(self) -> tuple[Fraction, ...]:
        x = [_ZERO] * self.lp.num_vars
        for b, v in zip(self.basis, self.rhs):
            if b < self.lp.num_vars:
                x[b] = v
        return tuple(x)

    def dual(self) -> tuple[Fraction, ...]:
        return tuple(s * (self.cost[c] - self.dj[c]) for s, c in zip(self.sign, self.init))


def _check_optimality(lp: LinearProgram, x, y) -> Fraction:
    """Verify primal and dual feasibility and strong duality; return the value."""
    for con in lp.constraints:
        lhs = sum((a * v for a, v in zip(con.coeffs, x) if a), _ZERO)
        ok = {">=": lhs >= con.rhs, "<=": lhs <= con.rhs, "=": lhs == con.rhs}[con.sense]
        if not ok:
            raise AssertionError(f"primal point violates {con}")
    if any(v < 0 for v in x):
        raise AssertionError("primal point has a negative entry")
    for con, yi in zip(lp.constraints, y):
        if (con.sense == ">=" and yi < 0) or (con.sense == "<=" and yi > 0):
            raise AssertionError("dual multiplier has the wrong sign")
    for j, c in enumerate(lp.objective):
        col = sum((con.coeffs[j] * yi for con, yi in zip(lp.constraints, y) if yi), _ZERO)
        if col > c:
            raise AssertionError(f"dual constraint {j} violated")
    primal_value = sum((c * v for c, v in zip(lp.objective, x)), _ZERO)
    dual_value = sum((con.rhs * yi for con, yi in zip(lp.constraints, y)), _ZERO)
    if primal_value != dual_value:
        raise AssertionError(f"duality gap {primal_value} vs {dual_value}")
    return primal_value


def result_from(tab: Tableau, status: str) -> LPResult:
    if status != "optimal":
        return LPResult(status)
    x, y = tab.primal(), tab.dual()
    value = _check_optimality(LinearProgram(tab.objective, tab.lp.constraints), x, y)
    return LPResult("optimal", value, x, y)


def solve_lp(lp: LinearProgram) -> LPResult:
    """Solve exactly; an optimal result carries verified primal and dual points."""
    tab = Tableau(lp)
    if not tab.phase_one():
        return LPResult("infeasible")
    return result_from(tab, tab.phase_two(lp.objective))
