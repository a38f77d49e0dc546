from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd
from typing import List, Sequence

from sympow.errors import ResourceCapError, ZeroIdealError
from sympow.logger import get_logger
from sympow.monomial.types import Monomial, MonomialIdeal, PrimeSupport, Ring

logger = get_logger("sympow.polyhedra")

DEFAULT_FACET_CAP = 20_000
DEFAULT_DIMENSION_CAP = 12
DEFAULT_VERTEX_CAP = 64


@dataclass(frozen=True)
class Halfspace:
    """normal·x ≥ offset, with a primitive nonnegative integer normal."""

    normal: tuple[int, ...]
    offset: int

    def value(self, m: Sequence[int]) -> int:
        return sum(w * e for w, e in zip(self.normal, m))

    def contains(self, m: Sequence[int], scale: int = 1) -> bool:
        return self.value(m) >= scale * self.offset

    @property
    def is_coordinate(self) -> bool:
        return self.offset == 0

    @property
    def center(self) -> PrimeSupport:
        return PrimeSupport.of(i for i, w in enumerate(self.normal) if w)

    def render(self, ring: Ring) -> str:
        terms = []
        for name, w in zip(ring.variables, self.normal):
            if w == 1:
                terms.append(name)
            elif w > 1:
                terms.append(f"{w}*{name}")
        return f"{' + '.join(terms) or '0'} >= {self.offset}"


@dataclass(frozen=True)
class NewtonPolyhedron:
    ambient: int
    vertices: tuple[Monomial, ...]
    facets: tuple[Halfspace, ...]
    coordinate_facets: tuple[Halfspace, ...]

    @property
    def halfspaces(self) -> tuple[Halfspace, ...]:
        coordinates = tuple(
            Halfspace(tuple(1 if k == i else 0 for k in range(self.ambient)), 0)
            for i in range(self.ambient)
        )
        return self.facets + coordinates

    def contains(self, m: Sequence[int], scale: int = 1) -> bool:
        return all(e >= 0 for e in m) and all(h.contains(m, scale) for h in self.facets)


def _primitive(v: Sequence[int]) -> tuple[int, ...]:
    g = reduce(gcd, (abs(x) for x in v), 0)
    return tuple(x // g for x in v) if g > 1 else tuple(v)


def rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over the rationals by fraction-exact Gaussian elimination."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    if not matrix:
        return 0
    r = 0
    width = len(matrix[0])
    for c in range(width):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        for i in range(r + 1, len(matrix)):
            f = matrix[i][c] / matrix[r][c]
            if f:
                matrix[i] = [a - f * b for a, b in zip(matrix[i], matrix[r])]
        r += 1
        if r == len(matrix):
            break
    return r


def _extreme_rays(points: Sequence[Monomial], n: int, cap: int) -> List[tuple[int, ...]]:
    """
    Extreme rays of {(a0, w) : a0 + w·v ≥ 0 for every point v, w ≥ 0} by
    double description.

    Constraint k < n is w_k ≥ 0; constraint n + j is the j-th point. Each ray
    carries the bitmask of constraints it makes tight; two rays are adjacent
    when no third ray is tight on everything they share.
    """
    d = n + 1
    first = points[0]
    rays: List[tuple[int, ...]] = [(1,) + (0,) * n]
    tight: List[int] = [(1 << n) - 1]
    for j in range(n):
        rays.append((-first[j],) + tuple(1 if k == j else 0 for k in range(n)))
        tight.append(((1 << n) - 1) & ~(1 << j) | (1 << n))

    for index, v in enumerate(points[1:], start=n + 1):
        bit = 1 << index
        values = [ray[0] + sum(w * e for w, e in zip(ray[1:], v)) for ray in rays]
        positive = [i for i, val in enumerate(values) if val > 0]
        negative = [i for i, val in enumerate(values) if val < 0]
        if not negative:
            for i, val in enumerate(values):
                if val == 0:
                    tight[i] |= bit
            continue

        new_rays: List[tuple[int, ...]] = []
        new_tight: List[int] = []
        for i, val in enumerate(values):
            if val >= 0:
                new_rays.append(rays[i])
                new_tight.append(tight[i] | (bit if val == 0 else 0))

        for p in positive:
            for q in negative:
                common = tight[p] & tight[q]
                if common.bit_count() < d - 2:
                    continue
                if any(
                    k != p and k != q and common & tight[k] == common
                    for k in range(len(rays))
                ):
                    continue
                a_p, a_q = values[p], values[q]
                ray = _primitive(
                    tuple(a_p * y - a_q * x for x, y in zip(rays[p], rays[q]))
                )
                new_rays.append(ray)
                new_tight.append(common | bit)

        rays, tight = new_rays, new_tight
        if len(rays) > cap:
            raise ResourceCapError(
                f"Facet enumeration exceeded cap {cap}",
                cap=cap,
                observed=len(rays),
                resource="facets",
            )
    return rays


@lru_cache(maxsize=512)
def newton_polyhedron(
    I: MonomialIdeal,
    facet_cap: int = DEFAULT_FACET_CAP,
    dimension_cap: int = DEFAULT_DIMENSION_CAP,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
) -> NewtonPolyhedron:
    """
    H-representation of conv(exponents of I) + nonnegative orthant.

    Parameters:
        I (MonomialIdeal): nonzero ideal.

    Returns:
        NewtonPolyhedron: vertices, non-coordinate facets (the Rees valuations)
        and the coordinate facets, each list in lexicographic order.
    """
    if I.is_zero:
        raise ZeroIdealError("The zero ideal has no Newton polyhedron")
    n = I.ngens
    if n > dimension_cap:
        raise ResourceCapError(
            f"Newton polyhedron in {n} variables exceeds cap {dimension_cap}",
            cap=dimension_cap,
            observed=n,
            resource="dimension",
        )
    if len(I) > vertex_cap:
        raise ResourceCapError(
            f"Newton polyhedron of {len(I)} generators exceeds cap {vertex_cap}",
            cap=vertex_cap,
            observed=len(I),
            resource="generators",
        )

    rays = _extreme_rays(I.generators, n, facet_cap)
    facets = set()
    coordinate = set()
    for ray in rays:
        w = ray[1:]
        if not any(w):
            continue
        h = Halfspace(tuple(w), -ray[0])
        (coordinate if h.is_coordinate else facets).add(h)

    ordered = sorted(facets, key=lambda h: (h.normal, h.offset))
    all_facets = ordered + sorted(coordinate, key=lambda h: h.normal)
    vertices = tuple(
        v
        for v in I.generators
        if rank([h.normal for h in all_facets if h.value(v) == h.offset]) == n
    )
    logger.debug(
        f"Newton polyhedron of {I}: {len(ordered)} bounded facets, {len(vertices)} vertices"
    )
    return NewtonPolyhedron(
        ambient=n,
        vertices=vertices,
        facets=tuple(ordered),
        coordinate_facets=tuple(sorted(coordinate, key=lambda h: h.normal)),
    )


def rees_valuations(I: MonomialIdeal) -> List[Halfspace]:
    if I.is_unit:
        return []
    return list(newton_polyhedron(I).facets)
