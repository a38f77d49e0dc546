from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import ceil
from typing import Dict, List, Optional, Sequence, Tuple, Union

from sympow.engine import Engine
from sympow.errors import ModeMismatchError, UnsupportedValuationError, ZeroIdealError
from sympow.monomial.decomposition import (
    associated_primes,
    component_support,
    localize_contract,
    minimal_primes,
)
from sympow.monomial.ideal import (
    bracket_power,
    ideal_sum,
    intersect_all,
    is_subideal,
    monomial_in_power,
    multiply,
    pi,
    power,
    principal,
    unit_ideal,
)
from sympow.monomial.types import Monomial, MonomialIdeal, PrimeSupport, sort_primes
from sympow.polyhedra.lattice import minimal_lattice_points, minimize_over_lattice
from sympow.polyhedra.lp import Constraint, LinearProgram, lp_minimize
from sympow.polyhedra.newton import Halfspace

WeightLike = Union[Halfspace, Sequence[int]]


class SymbolicMode(str, Enum):
    SQUAREFREE = "sqfree"
    ASSOCIATED = "ass"
    MINIMAL = "minprimes"
    COMPONENTS = "components"


@dataclass(frozen=True)
class SymbolicScheme:
    """
    How I^(s) is formed: over the minimal primes of a squarefree ideal, over
    Ass(I), over the minimal primes only, or over the supports of supplied
    components. The generating degree n and the value c are user inputs.
    """

    source: MonomialIdeal
    mode: SymbolicMode
    primes: tuple[PrimeSupport, ...]
    components: tuple[MonomialIdeal, ...] = ()
    generating_degree: Optional[int] = None
    c_value: Optional[int] = None

    @property
    def radical(self) -> bool:
        return self.source.is_squarefree

    @property
    def power_key(self) -> str:
        """What I^(s) depends on: the mode, the primes and any supplied components."""
        primes = ";".join(".".join(map(str, P.sort_key[1])) for P in self.primes)
        components = ";".join(Q.fingerprint for Q in self.components)
        return f"{self.mode.value}|{primes}|{components}"

    @property
    def key(self) -> str:
        return f"{self.power_key}|n={self.generating_degree}|c={self.c_value}"


@dataclass(frozen=True)
class NuHat:
    value: Fraction
    exact: bool
    method: str
    argmin: Optional[tuple[Fraction, ...]] = None
    sequence: tuple[tuple[int, Fraction], ...] = field(default=())


@dataclass(frozen=True)
class ValuationProfile:
    weight: Halfspace
    nu_I: int
    nu_hat: Fraction
    ratio: Fraction
    exact: bool = True
    center_is_minimal: bool = False


@dataclass(frozen=True)
class PowerEquality:
    index: int
    equal: bool
    witness: Optional[Monomial] = None


@dataclass(frozen=True)
class CShortcut:
    c: int
    tested_up_to: int
    holds: bool
    failure: Optional[Tuple[int, Monomial]] = None
    values: Dict[tuple[int, ...], Fraction] = field(default_factory=dict)


def _weight(w: WeightLike) -> tuple[int, ...]:
    normal = w.normal if isinstance(w, Halfspace) else tuple(w)
    if any(x < 0 for x in normal):
        raise UnsupportedValuationError(f"Weight {normal} has a negative entry", weight=normal)
    return normal


@lru_cache(maxsize=512)
def _minimal_primes(I: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    return tuple(minimal_primes(I))


def _indicators(primes: Sequence[PrimeSupport], n: int) -> List[tuple[int, ...]]:
    return [tuple(1 if i in P.variables else 0 for i in range(n)) for P in primes]


def _restrict(m: Sequence[int], P: PrimeSupport) -> Monomial:
    return tuple(e if i in P.variables else 0 for i, e in enumerate(m))


def scheme_for(
    I: MonomialIdeal,
    mode: Optional[Union[SymbolicMode, str]] = None,
    components: Sequence[MonomialIdeal] = (),
    generating_degree: Optional[int] = None,
    c_value: Optional[int] = None,
) -> SymbolicScheme:
    """
    Build and validate a symbolic scheme; without a mode, squarefree ideals
    use their minimal primes and everything else uses Ass(I).
    """
    if I.is_zero:
        raise ZeroIdealError("Symbolic powers of the zero ideal are not defined here")
    if mode is None:
        mode = SymbolicMode.SQUAREFREE if I.is_squarefree else SymbolicMode.ASSOCIATED
    mode = SymbolicMode(mode)

    if mode is SymbolicMode.SQUAREFREE and not I.is_squarefree:
        raise ModeMismatchError(
            f"{I} is not squarefree; use the ass or minprimes mode", mode=mode.value
        )
    if mode is SymbolicMode.COMPONENTS:
        if not components:
            raise ModeMismatchError("The components mode needs components", mode=mode.value)
        for Q in components:
            I.same_ring(Q)
        if intersect_all(components, I.ring) != I:
            raise ModeMismatchError(
                f"The supplied components do not intersect to {I}", mode=mode.value
            )
        primes = sort_primes({component_support(Q) for Q in components})
        missing = [P for P in associated_primes(I) if P not in primes]
        if missing:
            raise ModeMismatchError(
                "The supplied components miss associated primes",
                mode=mode.value,
                missing=[P.render(I.ring) for P in missing],
            )
    elif mode is SymbolicMode.ASSOCIATED:
        primes = associated_primes(I)
    else:
        primes = list(_minimal_primes(I))

    if generating_degree is not None and generating_degree < 1:
        raise ValueError("The generating degree must be positive")
    if c_value is not None and c_value < 1:
        raise ValueError("The c value must be positive")
    return SymbolicScheme(
        source=I,
        mode=mode,
        primes=tuple(primes),
        components=tuple(components),
        generating_degree=generating_degree,
        c_value=c_value,
    )


def symbolic_membership(m: Sequence[int], I: MonomialIdeal, s: int) -> bool:
    """
    m ∈ I^(s) for squarefree I: every minimal prime P has Σ_{i∈P} m_i ≥ s.
    """
    if not I.is_squarefree:
        raise ModeMismatchError(
            f"Membership by prime sums needs a squarefree ideal, got {I}",
            mode=SymbolicMode.SQUAREFREE.value,
        )
    return all(sum(m[i] for i in P.variables) >= s for P in _minimal_primes(I))


def nu(I: MonomialIdeal, w: WeightLike) -> int:
    """ν_w(I) = min over generators of w·g."""
    if I.is_zero:
        raise ZeroIdealError("ν is undefined on the zero ideal")
    weight = _weight(w)
    return min(sum(a * e for a, e in zip(weight, g)) for g in I.generators)


def bracket_envelope(components: Sequence[MonomialIdeal], r: int) -> MonomialIdeal:
    """
    ∩_i (Q_i^[r] + <π(Q_i)^(r-1)>) over the given components.
    """
    if not components:
        raise ValueError("The envelope needs at least one component")
    if r < 1:
        raise ValueError(f"Envelope index must be positive, got {r}")
    ring = components[0].ring
    parts = [
        ideal_sum(bracket_power(Q, r), principal(ring, tuple((r - 1) * e for e in pi(Q))))
        for Q in components
    ]
    return intersect_all(parts, ring)


class SymbolicEngine(Engine):
    name = "symbolic"

    def __init__(self, *args, nu_hat_depth: int = 6, **kwargs):
        super().__init__(*args, **kwargs)
        self.nu_hat_depth = nu_hat_depth
        self._relaxations: Dict[tuple[str, tuple[int, ...]], NuHat] = {}

    def scheme(self, I: MonomialIdeal, scheme: Optional[SymbolicScheme]) -> SymbolicScheme:
        if scheme is None:
            return scheme_for(I)
        if scheme.source != I:
            raise ModeMismatchError(f"Scheme was built for {scheme.source}, not {I}")
        return scheme

    def _compute_power(self, I: MonomialIdeal, s: int, scheme: SymbolicScheme) -> MonomialIdeal:
        cap = self.generator_cap
        if I.is_squarefree:
            primes = _minimal_primes(I)
            points = minimal_lattice_points(
                _indicators(primes, I.ngens), [s] * len(primes), [s] * I.ngens, cap=cap
            )
            return MonomialIdeal(I.ring, tuple(points))
        localized = [power(localize_contract(I, P), s, cap) for P in scheme.primes]
        return intersect_all(localized, I.ring, cap)

    def symbolic_power(
        self, I: MonomialIdeal, s: int, scheme: Optional[SymbolicScheme] = None
    ) -> MonomialIdeal:
        """
        I^(s) as the intersection of the s-th powers of I localized at the
        scheme's primes; for squarefree I these are the minimal points of
        Σ_{i∈P} a_i ≥ s over the minimal primes P.

        Parameters:
            I (MonomialIdeal): nonzero ideal.
            s (int): nonnegative symbolic exponent.
            scheme (Optional[SymbolicScheme]): defaults to scheme_for(I).

        Returns:
            MonomialIdeal: the symbolic power, minimally generated.
        """
        if s < 0:
            raise ValueError(f"Symbolic exponent must be nonnegative, got {s}")
        scheme = self.scheme(I, scheme)
        if s == 0 or I.is_unit:
            return unit_ideal(I.ring)
        if s == 1 and scheme.mode is SymbolicMode.ASSOCIATED:
            return I
        return self.workspace.cached(
            f"symbolic:{scheme.power_key}", I, s, lambda: self._compute_power(I, s, scheme)
        )

    def contains(
        self, m: Sequence[int], I: MonomialIdeal, s: int, scheme: Optional[SymbolicScheme] = None
    ) -> bool:
        """m ∈ I^(s) without forming I^(s)."""
        scheme = self.scheme(I, scheme)
        if s == 0 or I.is_unit:
            return True
        if I.is_squarefree:
            return symbolic_membership(m, I, s)
        return all(
            monomial_in_power(_restrict(m, P), localize_contract(I, P), s) for P in scheme.primes
        )

    def _lp(self, I: MonomialIdeal, weight: tuple[int, ...]) -> NuHat:
        key = (I.fingerprint, weight)
        if key in self._relaxations:
            return self._relaxations[key]
        primes = _minimal_primes(I)
        lp = LinearProgram.of(
            weight,
            [Constraint.of(row, 1) for row in _indicators(primes, I.ngens)],
        )
        solution = lp_minimize(lp)
        hat = NuHat(value=solution.value, exact=True, method="lp", argmin=solution.argmin)
        self._relaxations[key] = hat
        return hat

    def minimize(
        self,
        I: MonomialIdeal,
        w: WeightLike,
        s: int,
        scheme: Optional[SymbolicScheme] = None,
    ) -> Tuple[int, Monomial]:
        """
        ν_w(I^(s)) together with a generator of I^(s) attaining it.

        For squarefree I this is an integer program over the symbolic
        inequalities; the rounded-up LP optimum scaled by s is the incumbent.
        """
        weight = _weight(w)
        scheme = self.scheme(I, scheme)
        if s == 0 or I.is_unit:
            return 0, I.ring.unit()
        if I.is_squarefree:
            primes = _minimal_primes(I)
            relaxed = self._lp(I, weight)
            incumbent = tuple(min(s, ceil(s * a)) for a in relaxed.argmin)
            value, point = minimize_over_lattice(
                _indicators(primes, I.ngens),
                [s] * len(primes),
                [s] * I.ngens,
                weight,
                incumbent=incumbent,
            )
            return value, point
        J = self.symbolic_power(I, s, scheme)
        point = min(J.generators, key=lambda g: (sum(a * e for a, e in zip(weight, g)), g))
        return sum(a * e for a, e in zip(weight, point)), point

    def nu_of_symbolic_power(
        self,
        I: MonomialIdeal,
        w: WeightLike,
        s: int,
        scheme: Optional[SymbolicScheme] = None,
    ) -> int:
        return self.minimize(I, w, s, scheme)[0]

    def nu_hat(
        self,
        I: MonomialIdeal,
        w: WeightLike,
        scheme: Optional[SymbolicScheme] = None,
    ) -> NuHat:
        """
        ν̂_w(I) = lim ν_w(I^(s))/s.

        Exact by linear programming for squarefree I, exact as
        min_{m≤n} ν(I^(m))/m with a supplied generating degree n, otherwise the
        smallest ν(I^(s))/s seen up to the configured depth, flagged as an
        upper bound.
        """
        weight = _weight(w)
        scheme = self.scheme(I, scheme)
        if nu(I, weight) == 0:
            raise UnsupportedValuationError(
                f"Weight {weight} vanishes on a generator of {I}", weight=weight
            )
        if I.is_squarefree:
            return self._lp(I, weight)

        depth = scheme.generating_degree or self.nu_hat_depth
        sequence = tuple(
            (m, Fraction(self.nu_of_symbolic_power(I, weight, m, scheme), m))
            for m in range(1, depth + 1)
        )
        value = min(v for _, v in sequence)
        if scheme.generating_degree is not None:
            return NuHat(value=value, exact=True, method="generating-degree", sequence=sequence)
        self.debug(f"ν̂ of {I} at {weight} only bounded by {value} (depth {depth})", 2)
        return NuHat(value=value, exact=False, method="upper-bound", sequence=sequence)

    def waldschmidt(self, I: MonomialIdeal, scheme: Optional[SymbolicScheme] = None) -> NuHat:
        return self.nu_hat(I, (1,) * I.ngens, scheme)

    def noetherian_power_test(
        self, I: MonomialIdeal, scheme: Optional[SymbolicScheme] = None, c_max: int = 1
    ) -> List[PowerEquality]:
        """
        Compare (I^(i))^2 with I^(2i) for i = 1..c_max. The square always lies
        inside, so equality fails exactly when a generator of I^(2i) is missing
        from it; that generator is reported.
        """
        if c_max < 1:
            raise ValueError("c_max must be positive")
        scheme = self.scheme(I, scheme)
        results = []
        for i in range(1, c_max + 1):
            base = self.symbolic_power(I, i, scheme)
            square = multiply(base, base, self.generator_cap)
            check = is_subideal(self.symbolic_power(I, 2 * i, scheme), square)
            self.debug(f"(I^({i}))^2 {'=' if check.holds else '!='} I^({2 * i})", 2)
            results.append(PowerEquality(i, check.holds, check.witness))
        return results

    def c_shortcut(
        self,
        I: MonomialIdeal,
        scheme: Optional[SymbolicScheme],
        c: int,
        n_max: int,
        weights: Sequence[WeightLike] = (),
    ) -> CShortcut:
        """
        Test I^(cn) = (I^(c))^n for n = 2..n_max; when every test passes,
        ν̂_w(I) = ν_w(I^(c))/c for the requested weights.
        """
        if c < 1 or n_max < 1:
            raise ValueError("c and n_max must be positive")
        scheme = self.scheme(I, scheme)
        base = self.symbolic_power(I, c, scheme)
        for n in range(2, n_max + 1):
            target = self.symbolic_power(I, c * n, scheme)
            missing = next(
                (g for g in target.generators if not monomial_in_power(g, base, n)), None
            )
            if missing is not None:
                return CShortcut(c=c, tested_up_to=n, holds=False, failure=(n, missing))
        values = {_weight(w): Fraction(nu(base, w), c) for w in weights}
        return CShortcut(c=c, tested_up_to=n_max, holds=True, values=values)
