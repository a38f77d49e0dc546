from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from sympow.engine import Engine
from sympow.errors import ZeroIdealError
from sympow.monomial.ideal import (
    DEFAULT_GENERATOR_CAP,
    divides,
    ideal_containment,
    unit_ideal,
)
from sympow.monomial.types import Containment, Monomial, MonomialIdeal
from sympow.polyhedra.lattice import minimal_lattice_points
from sympow.polyhedra.newton import newton_polyhedron


@dataclass(frozen=True)
class ReesDegree:
    degree: int
    verified: bool


@dataclass(frozen=True)
class ClosureProfile:
    source: MonomialIdeal
    rees_degree: int
    rees_verified: bool
    b_value: int
    briancon_skoda_cap: int

    @property
    def is_normal(self) -> bool:
        return self.b_value == 0


@dataclass(frozen=True)
class KStatistics:
    values: tuple[tuple[int, int], ...]
    k_estimate: Fraction
    k_bound: Optional[Fraction] = None


def closure_power(
    I: MonomialIdeal, r: int, cap: int = DEFAULT_GENERATOR_CAP
) -> MonomialIdeal:
    """
    Minimal generators of the integral closure of I^r.

    These are the coordinatewise-minimal lattice points of r·NP(I); none of
    them exceeds r times the largest exponent of a generator in any coordinate.

    Parameters:
        I (MonomialIdeal): nonzero ideal.
        r (int): nonnegative power.

    Returns:
        MonomialIdeal: the closure, generated by lattice points.
    """
    if I.is_zero:
        raise ZeroIdealError("The closure of a power of the zero ideal is zero")
    if r < 0:
        raise ValueError(f"Closure power exponent must be nonnegative, got {r}")
    if r == 0 or I.is_unit:
        return unit_ideal(I.ring)

    polyhedron = newton_polyhedron(I)
    normals = [h.normal for h in polyhedron.facets]
    bounds = [r * h.offset for h in polyhedron.facets]
    upper = [r * max(column) for column in zip(*polyhedron.vertices)]
    points = minimal_lattice_points(normals, bounds, upper, cap=cap)
    return MonomialIdeal(I.ring, tuple(points))


def in_closure(m: Sequence[int], I: MonomialIdeal, r: int) -> bool:
    """Evaluate the facet inequalities of r·NP(I) at m."""
    if r == 0:
        return True
    if I.is_zero:
        return False
    if I.is_unit:
        return True
    return newton_polyhedron(I).contains(m, r)


def closure_contains(A: MonomialIdeal, I: MonomialIdeal, r: int) -> Containment:
    """
    A ⊆ closure(I^r) iff every Rees valuation satisfies ν_w(A) ≥ r·ν_w(I); the
    first generator of A breaking a facet is the witness.
    """
    A.same_ring(I)
    for g in A.generators:
        if not in_closure(g, I, r):
            return Containment(False, g)
    return Containment(True)


class ClosureEngine(Engine):
    name = "closure"

    def closure_power(self, I: MonomialIdeal, r: int) -> MonomialIdeal:
        return self.workspace.cached(
            "closure", I, r, lambda: closure_power(I, r, self.generator_cap)
        )

    def _splits(self, x: Monomial, I: MonomialIdeal, m: int) -> bool:
        for i in range(1, m // 2 + 1):
            for g in self.closure_power(I, i).generators:
                if divides(g, x) and in_closure(
                    tuple(a - b for a, b in zip(x, g)), I, m - i
                ):
                    return True
        return False

    def regenerates(self, I: MonomialIdeal, m: int) -> Optional[Monomial]:
        """
        Check closure(I^m) = Σ_{1≤i≤m/2} closure(I^i)·closure(I^(m-i)).

        Returns:
            Optional[Monomial]: a generator of closure(I^m) outside the sum, or None.
        """
        for x in self.closure_power(I, m).generators:
            if not self._splits(x, I, m):
                return x
        return None

    def rees_generation_degree(
        self,
        I: MonomialIdeal,
        cap: Optional[int] = None,
        window: Optional[int] = None,
    ) -> ReesDegree:
        """
        Degree bound d for the generators of the normalized Rees algebra.

        Tests the regeneration of closure(I^m) for m = 2, 3, ... and keeps d as
        the last failing m; the search ends once m passes d + window.

        Parameters:
            I (MonomialIdeal): nonzero ideal.
            cap (Optional[int]): largest degree accepted, ℓ - 1 by default.
            window (Optional[int]): degrees tested past d, the cap by default.

        Returns:
            ReesDegree: the degree and whether it was verified under the cap.
        """
        if I.is_zero:
            raise ZeroIdealError("The zero ideal has no Rees algebra")
        cap = cap if cap is not None else max(1, I.ngens - 1)
        window = window if window is not None else cap
        if cap < 1 or window < 1:
            raise ValueError("Rees degree cap and window must be positive")
        if I.is_unit or len(I) == 1:
            return ReesDegree(1, True)

        d = 1
        m = 2
        while m <= d + window:
            witness = self.regenerates(I, m)
            if witness is not None:
                self.debug(f"closure({I}^{m}) needs {I.ring.render(witness)} in degree {m}", 2)
                d = m
                if d > cap:
                    self.info(f"Rees degree of {I} exceeds cap {cap}, unverified", 2)
                    return ReesDegree(cap, False)
            m += 1
        self.debug(f"Rees degree of {I} is {d}", 2)
        return ReesDegree(d, True)

    def b_of(
        self,
        I: MonomialIdeal,
        cap: Optional[int] = None,
        window: Optional[int] = None,
    ) -> ClosureProfile:
        """
        The least k with closure(I^(r+k)) ⊆ I^r for every r.

        With d the Rees degree, closure(I^j) = I^(j-d)·closure(I^d) past d, so
        checking j in [k+1, k+d] decides k. Falls back to the Briançon-Skoda
        value ℓ - 1 when no smaller k passes.
        """
        if I.is_zero:
            raise ZeroIdealError("b is undefined for the zero ideal")
        skoda = max(0, I.ngens - 1)
        if I.is_unit:
            return ClosureProfile(I, 1, True, 0, skoda)

        degree = self.rees_generation_degree(I, cap, window)
        d = degree.degree
        b = skoda
        for k in range(0, skoda):
            window_ok = all(
                ideal_containment(self.closure_power(I, j), I, j - k).holds
                for j in range(k + 1, k + d + 1)
            )
            if window_ok:
                b = k
                break
        self.info(f"b({I}) = {b} (Rees degree {d}{'' if degree.verified else ', unverified'})", 1)
        return ClosureProfile(
            source=I,
            rees_degree=d,
            rees_verified=degree.verified,
            b_value=b,
            briancon_skoda_cap=skoda,
        )

    def k_value(self, I: MonomialIdeal, r: int) -> int:
        """K_r = min{s : closure(I^s) ⊆ I^r}, searched upward from s = r."""
        limit = r + max(0, I.ngens - 1)
        s = r
        while s < limit and not ideal_containment(self.closure_power(I, s), I, r).holds:
            s += 1
        return s

    def K_statistics(
        self, I: MonomialIdeal, r_max: int, profile: Optional[ClosureProfile] = None
    ) -> KStatistics:
        if r_max < 1:
            raise ValueError("r_max must be positive")
        if I.is_zero:
            raise ZeroIdealError("K statistics are undefined for the zero ideal")
        tasks = [lambda r=r: self.k_value(I, r) for r in range(1, r_max + 1)]
        values: List[tuple[int, int]] = list(zip(range(1, r_max + 1), self.parallel(tasks)))
        estimate = max(Fraction(k, r) for r, k in values)
        bound = Fraction(2 + profile.b_value, 2) if profile is not None else None
        return KStatistics(values=tuple(values), k_estimate=estimate, k_bound=bound)
