from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence

from sympow.errors import InfeasibleProgramError, UnboundedProgramError

Rational = Fraction


class Sense(str, Enum):
    GE = ">="
    LE = "<="
    EQ = "="


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[Fraction, ...]
    bound: Fraction
    sense: Sense = Sense.GE

    @classmethod
    def of(cls, coefficients: Sequence, bound, sense: Sense = Sense.GE) -> Constraint:
        return cls(tuple(Fraction(c) for c in coefficients), Fraction(bound), sense)

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((a * v for a, v in zip(self.coefficients, x)), Fraction(0))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        v = self.value(x)
        if self.sense is Sense.GE:
            return v >= self.bound
        if self.sense is Sense.LE:
            return v <= self.bound
        return v == self.bound


@dataclass(frozen=True)
class LinearProgram:
    """
    minimize objective·x subject to the constraints, with x ≥ 0 when nonnegative is set.
    """

    objective: tuple[Fraction, ...]
    constraints: tuple[Constraint, ...]
    nonnegative: bool = True

    @classmethod
    def of(
        cls, objective: Sequence, constraints: Sequence[Constraint], nonnegative: bool = True
    ) -> LinearProgram:
        return cls(tuple(Fraction(c) for c in objective), tuple(constraints), nonnegative)

    @property
    def dimension(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPSolution:
    value: Fraction
    argmin: tuple[Fraction, ...]
    dual: tuple[Fraction, ...]


class SimplexTableau:
    """
    Dense tableau over Fractions; rows are kept in B^-1·A form.
    """

    def __init__(self, rows: List[List[Fraction]], rhs: List[Fraction], basis: List[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.width = len(rows[0]) if rows else 0

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            self.rows[r] = row = [v / piv for v in row]
            self.rhs[r] /= piv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f:
                self.rows[i] = [a - f * b for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, costs: Sequence[Fraction]) -> List[Fraction]:
        cb = [costs[b] for b in self.basis]
        out = list(costs)
        for weight, row in zip(cb, self.rows):
            if weight:
                out = [o - weight * a for o, a in zip(out, row)]
        return out

    def bland_minimize(self, costs: Sequence[Fraction], columns: Sequence[int]) -> None:
        """
        Primal simplex with Bland's rule: lowest-index improving column enters,
        ratio ties leave by lowest basic index.
        """
        while True:
            rc = self.reduced_costs(costs)
            basic = set(self.basis)
            entering = next((j for j in columns if j not in basic and rc[j] < 0), None)
            if entering is None:
                return
            leaving: Optional[int] = None
            best: Optional[Fraction] = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if (
                        best is None
                        or ratio < best
                        or (ratio == best and self.basis[i] < self.basis[leaving])
                    ):
                        best, leaving = ratio, i
            if leaving is None:
                raise UnboundedProgramError(
                    f"Objective unbounded below along column {entering}", direction=entering
                )
            self.pivot(leaving, entering)


def lp_minimize(lp: LinearProgram) -> LPSolution:
    """
    Solve a linear program exactly with the two-phase simplex method.

    Returns:
        LPSolution: optimal value, one optimal vertex and a dual certificate y
        (y_i ≥ 0 on ≥ rows, y_i ≤ 0 on ≤ rows, Aᵀy ≤ c, b·y = value).
    """
    n = lp.dimension
    split = 1 if lp.nonnegative else 2
    nx = n * split
    m = len(lp.constraints)

    signs: List[int] = []
    senses: List[Sense] = []
    a_rows: List[List[Fraction]] = []
    rhs: List[Fraction] = []
    for con in lp.constraints:
        coeffs = list(con.coefficients)
        if not lp.nonnegative:
            coeffs = coeffs + [-c for c in coeffs]
        b = con.bound
        sense = con.sense
        sign = 1
        if b < 0:
            coeffs = [-c for c in coeffs]
            b = -b
            sign = -1
            sense = {Sense.GE: Sense.LE, Sense.LE: Sense.GE, Sense.EQ: Sense.EQ}[sense]
        signs.append(sign)
        senses.append(sense)
        a_rows.append(coeffs)
        rhs.append(b)

    slack_rows = [i for i, s in enumerate(senses) if s is not Sense.EQ]
    n_slack = len(slack_rows)
    width = nx + n_slack + m
    art0 = nx + n_slack

    rows = []
    for i in range(m):
        row = a_rows[i] + [Fraction(0)] * (n_slack + m)
        if senses[i] is not Sense.EQ:
            k = slack_rows.index(i)
            row[nx + k] = Fraction(1 if senses[i] is Sense.LE else -1)
        row[art0 + i] = Fraction(1)
        rows.append(row)

    tableau = SimplexTableau(rows, rhs[:], [art0 + i for i in range(m)])

    phase_one = [Fraction(0)] * art0 + [Fraction(1)] * m
    tableau.bland_minimize(phase_one, range(width))
    infeasibility = sum(
        (tableau.rhs[i] for i, b in enumerate(tableau.basis) if b >= art0), Fraction(0)
    )
    if infeasibility > 0:
        raise InfeasibleProgramError(
            "Linear program has no feasible point", phase_one_value=infeasibility
        )

    for i, b in enumerate(tableau.basis):
        if b >= art0:
            j = next((j for j in range(art0) if tableau.rows[i][j] != 0), None)
            if j is not None:
                tableau.pivot(i, j)

    costs = list(lp.objective)
    if not lp.nonnegative:
        costs = costs + [-c for c in costs]
    costs = costs + [Fraction(0)] * (n_slack + m)
    tableau.bland_minimize(costs, range(art0))

    x = [Fraction(0)] * nx
    for i, b in enumerate(tableau.basis):
        if b < nx:
            x[b] = tableau.rhs[i]
    if not lp.nonnegative:
        x = [x[j] - x[n + j] for j in range(n)]

    rc = tableau.reduced_costs(costs)
    dual = tuple(-rc[art0 + i] * signs[i] for i in range(m))
    value = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return LPSolution(value=value, argmin=tuple(x), dual=dual)


def verify_dual(lp: LinearProgram, solution: LPSolution) -> bool:
    """
    Check the primal point and the dual certificate against each other exactly.
    """
    x, y = solution.argmin, solution.dual
    if lp.nonnegative and any(v < 0 for v in x):
        return False
    if not all(con.satisfied_by(x) for con in lp.constraints):
        return False
    for con, yi in zip(lp.constraints, y):
        if con.sense is Sense.GE and yi < 0:
            return False
        if con.sense is Sense.LE and yi > 0:
            return False
    for j, c in enumerate(lp.objective):
        column = sum((con.coefficients[j] * yi for con, yi in zip(lp.constraints, y)), Fraction(0))
        if lp.nonnegative and column > c:
            return False
        if not lp.nonnegative and column != c:
            return False
    dual_value = sum((con.bound * yi for con, yi in zip(lp.constraints, y)), Fraction(0))
    primal_value = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return dual_value == primal_value == solution.value
