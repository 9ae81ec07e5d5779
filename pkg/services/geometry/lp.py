"""
Exact two-phase simplex over the rationals.

Free variables are split as x = x_plus - x_minus, every row gets a slack
(inequalities) and an artificial variable, and Bland's rule keeps the pivot
sequence finite.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from models.rational import RatLike, Vector, dot, format_rat, format_vector, to_rat, to_vector
from utils.errors import DimensionMismatchError, InputError
from utils.metrics import metrics

Constraint = Tuple[Sequence[RatLike], RatLike]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    """Outcome of ``lp_optimize``; ``ray`` is set only when unbounded."""
    status: str
    point: Optional[Vector] = None
    value: Optional[Fraction] = None
    ray: Optional[Vector] = None

    @property
    def is_optimal(self) -> bool:
        return self.status == OPTIMAL

    def to_dict(self) -> Dict[str, Any]:
        return {
            "status": self.status,
            "point": format_vector(self.point) if self.point is not None else None,
            "value": format_rat(self.value) if self.value is not None else None,
            "ray": format_vector(self.ray) if self.ray is not None else None,
        }


class _Tableau:
    def __init__(self, rows: List[List[Fraction]], basis: List[int], n_cols: int):
        self.rows = rows
        self.basis = basis
        self.n_cols = n_cols
        self.objective: List[Fraction] = []
        self.pivots = 0

    def set_cost(self, cost: Sequence[Fraction]) -> None:
        obj = [Fraction(c) for c in cost] + [Fraction(0)]
        for i, row in enumerate(self.rows):
            cb = cost[self.basis[i]]
            if cb:
                obj = [o - cb * r for o, r in zip(obj, row)]
        self.objective = obj

    def pivot(self, r: int, e: int) -> None:
        lead = self.rows[r][e]
        self.rows[r] = [x / lead for x in self.rows[r]]
        pivot_row = self.rows[r]
        for i, row in enumerate(self.rows):
            if i != r and row[e] != 0:
                factor = row[e]
                self.rows[i] = [a - factor * b for a, b in zip(row, pivot_row)]
        if self.objective and self.objective[e] != 0:
            factor = self.objective[e]
            self.objective = [a - factor * b for a, b in zip(self.objective, pivot_row)]
        self.basis[r] = e
        self.pivots += 1

    def run(self, blocked: frozenset) -> Optional[int]:
        """Maximize the current cost; returns the entering column if unbounded."""
        while True:
            in_basis = set(self.basis)
            entering = next(
                (j for j in range(self.n_cols)
                 if j not in blocked and j not in in_basis and self.objective[j] > 0),
                None,
            )
            if entering is None:
                return None
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = row[-1] / row[entering]
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        leave, best = i, ratio
            if leave is None:
                return entering
            self.pivot(leave, entering)

    def values(self) -> List[Fraction]:
        x = [Fraction(0)] * self.n_cols
        for i, b in enumerate(self.basis):
            x[b] = self.rows[i][-1]
        return x


def lp_optimize(
    constraints: Sequence[Constraint],
    objective: Sequence[RatLike],
    sense: str = "max",
    equalities: Sequence[Constraint] = (),
) -> LPResult:
    """
    Optimize <objective, x> subject to <a, x> <= b for (a, b) in ``constraints``
    and <a, x> = b for (a, b) in ``equalities``; x is free.
    """
    if sense not in ("max", "min"):
        raise InputError(f"unknown LP sense: {sense}")
    c = to_vector(objective)
    n = len(c)
    rows_in = [(to_vector(a), to_rat(b), False) for a, b in constraints]
    rows_in += [(to_vector(a), to_rat(b), True) for a, b in equalities]
    if any(len(a) != n for a, _, _ in rows_in):
        raise DimensionMismatchError("LP constraint length differs from objective length")
    metrics.increment_counter("lp.solves")

    m = len(rows_in)
    n_ineq = sum(1 for _, _, eq in rows_in if not eq)
    slack_start = 2 * n
    art_start = slack_start + n_ineq
    n_cols = art_start + m

    rows: List[List[Fraction]] = []
    slack = slack_start
    for i, (a, b, is_eq) in enumerate(rows_in):
        row = [Fraction(0)] * (n_cols + 1)
        for j in range(n):
            row[j] = a[j]
            row[n + j] = -a[j]
        if not is_eq:
            row[slack] = Fraction(1)
            slack += 1
        row[-1] = b
        if b < 0:
            row = [-x for x in row]
        row[art_start + i] = Fraction(1)
        rows.append(row)

    tableau = _Tableau(rows, [art_start + i for i in range(m)], n_cols)

    # Phase 1: drive artificials to zero
    phase1_cost = [Fraction(0)] * art_start + [Fraction(-1)] * m
    tableau.set_cost(phase1_cost)
    tableau.run(blocked=frozenset())
    if tableau.objective and tableau.objective[-1] != 0:
        metrics.increment_counter("lp.pivots", tableau.pivots)
        return LPResult(status=INFEASIBLE)

    artificial = frozenset(range(art_start, n_cols))
    keep = []
    for i in range(len(tableau.rows)):
        if tableau.basis[i] in artificial:
            column = next((j for j in range(art_start) if tableau.rows[i][j] != 0), None)
            if column is None:
                continue
            tableau.pivot(i, column)
        keep.append(i)
    tableau.rows = [tableau.rows[i] for i in keep]
    tableau.basis = [tableau.basis[i] for i in keep]

    # Phase 2
    sign = 1 if sense == "max" else -1
    cost = [sign * x for x in c] + [-sign * x for x in c] + [Fraction(0)] * (n_cols - 2 * n)
    tableau.set_cost(cost)
    entering = tableau.run(blocked=artificial)
    metrics.increment_counter("lp.pivots", tableau.pivots)

    if entering is not None:
        direction = [Fraction(0)] * n_cols
        direction[entering] = Fraction(1)
        for i, b in enumerate(tableau.basis):
            direction[b] = -tableau.rows[i][entering]
        ray = tuple(direction[j] - direction[n + j] for j in range(n))
        return LPResult(status=UNBOUNDED, ray=ray)

    values = tableau.values()
    point = tuple(values[j] - values[n + j] for j in range(n))
    return LPResult(status=OPTIMAL, point=point, value=dot(c, point))
