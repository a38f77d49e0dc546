from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from sympow.errors import ResourceCapError
from sympow.monomial.types import Monomial

DEFAULT_NODE_CAP = 20_000_000


class LatticeSearch:
    """
    Depth-first walk over the coordinatewise-minimal integer points of
    {x ≥ 0 : w_f·x ≥ b_f for every f} inside the box x ≤ upper.

    The normals must be nonnegative. A point is minimal exactly when every
    positive coordinate i has a constraint f with w_f·x - w_fi < b_f; that
    condition only gets harder as coordinates grow, so it prunes partial
    points as well. The last coordinate touching a constraint is forced
    high enough to satisfy it.
    """

    def __init__(
        self,
        normals: Sequence[Sequence[int]],
        bounds: Sequence[int],
        upper: Sequence[int],
        node_cap: int = DEFAULT_NODE_CAP,
    ) -> None:
        self.n = len(upper)
        self.upper = list(upper)
        self.node_cap = node_cap
        self.nodes = 0
        self.infeasible = False

        kept_normals = []
        kept_bounds = []
        for w, b in zip(normals, bounds):
            if b <= 0:
                continue
            if not any(w):
                self.infeasible = True
                continue
            kept_normals.append(tuple(w))
            kept_bounds.append(b)
        self.bounds = kept_bounds
        self.columns: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        self.closing: List[List[Tuple[int, int]]] = [[] for _ in range(self.n)]
        for f, w in enumerate(kept_normals):
            for j, wj in enumerate(w):
                if wj:
                    self.columns[j].append((f, wj))
            last = max(j for j, wj in enumerate(w) if wj)
            self.closing[last].append((f, w[last]))

    def _walk(self, visit_leaf, objective: Optional[Sequence[int]] = None, best=None):
        n = self.n
        bounds = self.bounds
        columns = self.columns
        closing = self.closing
        upper = self.upper
        sums = [0] * len(bounds)
        point = [0] * n
        positive: List[int] = []
        state = {"best": best}

        def witnessed(i: int) -> bool:
            return any(sums[f] < bounds[f] + w for f, w in columns[i])

        def descend(j: int, cost: int) -> None:
            self.nodes += 1
            if self.nodes > self.node_cap:
                raise ResourceCapError(
                    f"Lattice enumeration exceeded {self.node_cap} nodes",
                    cap=self.node_cap,
                    observed=self.nodes,
                    resource="lattice nodes",
                )
            if j == n:
                state["best"] = visit_leaf(tuple(point), cost, state["best"])
                return

            lo = 0
            for f, w in closing[j]:
                need = bounds[f] - sums[f]
                if need > 0:
                    lo = max(lo, -(-need // w))
            hi = upper[j]
            col = columns[j]
            if col:
                hi = min(hi, max((bounds[f] - sums[f] - 1) // w + 1 for f, w in col))
            else:
                hi = 0
            if lo > upper[j]:
                return

            step = objective[j] if objective is not None else 0
            if lo == 0:
                descend(j + 1, cost)
                start = 1
            else:
                start = lo
            if start > hi:
                return

            for f, w in col:
                sums[f] += start * w
            point[j] = start
            positive.append(j)
            x = start
            while True:
                best_value = state["best"][0] if state["best"] is not None else None
                if best_value is not None and cost + x * step >= best_value:
                    break
                if not all(witnessed(i) for i in positive):
                    break
                descend(j + 1, cost + x * step)
                if x == hi:
                    break
                x += 1
                for f, w in col:
                    sums[f] += w
                point[j] = x
            for f, w in col:
                sums[f] -= x * w
            point[j] = 0
            positive.pop()

        descend(0, 0)
        return state["best"]


def minimal_lattice_points(
    normals: Sequence[Sequence[int]],
    bounds: Sequence[int],
    upper: Sequence[int],
    cap: int = 200_000,
    node_cap: int = DEFAULT_NODE_CAP,
) -> List[Monomial]:
    """
    All minimal integer points of {x ≥ 0 : w_f·x ≥ b_f} with x ≤ upper, sorted.
    """
    search = LatticeSearch(normals, bounds, upper, node_cap)
    if search.infeasible:
        return []
    found: List[Monomial] = []

    def record(p, cost, best):
        found.append(p)
        if len(found) > cap:
            raise ResourceCapError(
                f"Lattice point count exceeded cap {cap}", cap=cap, observed=len(found)
            )
        return best

    search._walk(record)
    found.sort()
    return found


def minimize_over_lattice(
    normals: Sequence[Sequence[int]],
    bounds: Sequence[int],
    upper: Sequence[int],
    objective: Sequence[int],
    incumbent: Optional[Monomial] = None,
    node_cap: int = DEFAULT_NODE_CAP,
) -> Optional[Tuple[int, Monomial]]:
    """
    Exact integer minimum of objective·x over the same region (objective ≥ 0).

    A feasible incumbent, e.g. a rounded LP optimum, tightens the pruning;
    it is returned when nothing strictly better exists.
    """
    search = LatticeSearch(normals, bounds, upper, node_cap)
    if search.infeasible:
        return None
    best = None
    if incumbent is not None:
        best = (sum(c * e for c, e in zip(objective, incumbent)), tuple(incumbent))

    def improve(p, cost, current):
        if current is None or cost < current[0]:
            return cost, p
        return current

    return search._walk(improve, objective=objective, best=best)
