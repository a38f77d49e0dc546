from __future__ import annotations

from fractions import Fraction
from math import ceil, comb, floor
from typing import Dict, Iterable, List, Optional, Sequence

from sympow.closure.engine import ClosureEngine, ClosureProfile, in_closure
from sympow.engine import Engine
from sympow.errors import (
    HypothesisFailedError,
    ResourceCapError,
    UnsupportedValuationError,
    ZeroIdealError,
)
from sympow.monomial.decomposition import minimal_primes
from sympow.monomial.ideal import (
    contains_monomial,
    divides,
    ideal_containment,
    intersect_all,
    is_subideal,
    monomial_in_power,
    pi,
    power,
)
from sympow.monomial.types import Containment, Monomial, MonomialIdeal, sort_primes
from sympow.polyhedra.lp import Constraint, LinearProgram, Sense, lp_minimize
from sympow.polyhedra.newton import Halfspace, rees_valuations
from sympow.resurgence.types import (
    BOUNDED_RHO_HAT_CAVEAT,
    NON_RADICAL_CAVEAT,
    UNVERIFIED_REES_CAVEAT,
    AsymptoticResurgence,
    BoundCertificate,
    CandidateTest,
    ChudnovskyReport,
    ChudnovskyRow,
    ContainmentTable,
    EnvelopeCheck,
    ExpectedCertificate,
    GammaBound,
    LambdaBracket,
    LambdaBrackets,
    Pair,
    ResurgenceResult,
    ResurgenceStatus,
)
from sympow.symbolic.engine import (
    NuHat,
    SymbolicEngine,
    SymbolicMode,
    SymbolicScheme,
    ValuationProfile,
    bracket_envelope,
    nu,
)

# I^r is materialized for containment tests only below this many products
POWER_PRODUCT_LIMIT = 20_000


def _below(x: Fraction) -> int:
    """Largest integer strictly below x."""
    return ceil(x) - 1


def _above(x: Fraction) -> int:
    """Smallest integer strictly above x."""
    return floor(x) + 1


def _order(pairs: Iterable[Pair]) -> List[Pair]:
    return sorted(set(pairs), key=lambda p: (p[1], -p[0]))


class ResurgenceEngine(Engine):
    name = "resurgence"

    def __init__(
        self,
        *args,
        search_cap: int = 20,
        rees_cap: Optional[int] = None,
        rees_window: Optional[int] = None,
        nu_hat_depth: int = 6,
        **kwargs,
    ):
        super().__init__(*args, **kwargs)
        self.search_cap = search_cap
        self.rees_cap = rees_cap
        self.rees_window = rees_window
        nested = dict(
            workspace=self.workspace,
            threads=self.threads,
            logger_base_indent=self.logger_base_indent + 1,
        )
        self.symbolic = SymbolicEngine(nu_hat_depth=nu_hat_depth, **nested)
        self.closure = ClosureEngine(**nested)
        self._profiles: Dict[str, ClosureProfile] = {}
        self._asymptotic: Dict[tuple[str, str], AsymptoticResurgence] = {}

    # -- shared pieces -------------------------------------------------------

    def big_height(self, scheme: SymbolicScheme) -> int:
        return max((P.height for P in scheme.primes), default=0)

    def caveats(self, I: MonomialIdeal) -> List[str]:
        return [] if I.is_squarefree else [NON_RADICAL_CAVEAT]

    def profile(self, I: MonomialIdeal) -> ClosureProfile:
        if I.fingerprint not in self._profiles:
            self._profiles[I.fingerprint] = self.closure.b_of(I, self.rees_cap, self.rees_window)
        return self._profiles[I.fingerprint]

    def center_ideal(self, I: MonomialIdeal) -> MonomialIdeal:
        """
        Intersection of the centers of the Rees valuations that are not
        minimal primes of I; the unit ideal when there are none.
        """
        minimal = set(minimal_primes(I))
        centers = sort_primes({w.center for w in rees_valuations(I)} - minimal)
        return intersect_all([P.as_ideal(I.ring) for P in centers], I.ring, self.generator_cap)

    def _nu_hat(self, I: MonomialIdeal, w: Halfspace, scheme: SymbolicScheme) -> NuHat:
        if w.center in set(minimal_primes(I)):
            return NuHat(value=Fraction(nu(I, w)), exact=True, method="minimal-center")
        return self.symbolic.nu_hat(I, w, scheme)

    def _power_containment(self, A: MonomialIdeal, I: MonomialIdeal, r: int) -> Containment:
        if r > 1 and comb(len(I) + r - 1, r) <= POWER_PRODUCT_LIMIT:
            return is_subideal(A, self.workspace.power(I, r))
        return ideal_containment(A, I, r)

    def symbolic_containment(
        self, I: MonomialIdeal, s: int, r: int, scheme: Optional[SymbolicScheme] = None
    ) -> Containment:
        """
        Decide I^(s) ⊆ I^r.

        For squarefree I a Rees valuation with ν_w(I^(s)) < r·ν_w(I) already
        shows I^(s) ⊄ closure(I^r), and the minimizing generator is the
        witness; I^(s) is only formed when every valuation passes.
        """
        scheme = self.symbolic.scheme(I, scheme)
        if r == 0 or I.is_unit:
            return Containment(True)
        if I.is_squarefree and s > 0:
            for w in rees_valuations(I):
                value, point = self.symbolic.minimize(I, w, s, scheme)
                if value < r * w.offset:
                    return Containment(False, point)
        return self._power_containment(self.symbolic.symbolic_power(I, s, scheme), I, r)

    def closure_containment(
        self, I: MonomialIdeal, s: int, r: int, scheme: Optional[SymbolicScheme] = None
    ) -> Containment:
        """Decide I^(s) ⊆ closure(I^r) from the Rees valuations."""
        scheme = self.symbolic.scheme(I, scheme)
        if r == 0 or I.is_unit:
            return Containment(True)
        if I.is_squarefree:
            for w in rees_valuations(I):
                value, point = self.symbolic.minimize(I, w, s, scheme)
                if value < r * w.offset:
                    return Containment(False, point)
            return Containment(True)
        A = self.symbolic.symbolic_power(I, s, scheme)
        for g in A.generators:
            if not in_closure(g, I, r):
                return Containment(False, g)
        return Containment(True)

    def _in_product_with_closure(
        self, m: Monomial, J: MonomialIdeal, I: MonomialIdeal, r: int
    ) -> bool:
        return any(
            divides(g, m) and in_closure(tuple(a - b for a, b in zip(m, g)), I, r)
            for g in J.generators
        )

    # -- asymptotic resurgence ----------------------------------------------

    def asymptotic_resurgence(
        self, I: MonomialIdeal, scheme: Optional[SymbolicScheme] = None
    ) -> AsymptoticResurgence:
        """
        ρ̂(I) as the largest ν_w(I)/ν̂_w(I) over the Rees valuations of I.

        Parameters:
            I (MonomialIdeal): proper nonzero ideal.
            scheme (Optional[SymbolicScheme]): symbolic scheme, automatic when omitted.

        Returns:
            AsymptoticResurgence: the value with one profile per valuation; a
            bracket [max lower ratio, h] when some ν̂ is only bounded.
        """
        if I.is_zero:
            raise ZeroIdealError("Asymptotic resurgence of the zero ideal is undefined")
        scheme = self.symbolic.scheme(I, scheme)
        key = (I.fingerprint, scheme.key)
        if key in self._asymptotic:
            return self._asymptotic[key]
        facets = rees_valuations(I)
        if not facets:
            raise UnsupportedValuationError(f"{I} has no Rees valuation")

        minimal = set(minimal_primes(I))
        hats = self.parallel([lambda w=w: self._nu_hat(I, w, scheme) for w in facets])
        profiles = []
        for w, hat in zip(facets, hats):
            nu_I = nu(I, w)
            profiles.append(
                ValuationProfile(
                    weight=w,
                    nu_I=nu_I,
                    nu_hat=hat.value,
                    ratio=Fraction(nu_I) / hat.value,
                    exact=hat.exact,
                    center_is_minimal=w.center in minimal,
                )
            )
        exact = all(p.exact for p in profiles)
        lower = max(p.ratio for p in profiles)
        upper = lower if exact else max(lower, Fraction(self.big_height(scheme)))
        self.info(f"ρ̂({I}) {'=' if exact else '>='} {lower} over {len(profiles)} Rees valuations", 1)
        result = AsymptoticResurgence(
            lower=lower, upper=upper, exact=exact, profiles=tuple(profiles)
        )
        self._asymptotic[key] = result
        return result

    def rho_hat_from_generating_degree(
        self, I: MonomialIdeal, n: int, scheme: Optional[SymbolicScheme] = None
    ) -> Fraction:
        """max over Rees valuations and j ≤ n of j·ν_w(I)/ν_w(I^(j))."""
        if n < 1:
            raise ValueError("The generating degree must be positive")
        scheme = self.symbolic.scheme(I, scheme)
        best = Fraction(0)
        for w in rees_valuations(I):
            nu_I = nu(I, w)
            for j in range(1, n + 1):
                best = max(best, Fraction(j * nu_I, self.symbolic.nu_of_symbolic_power(I, w, j, scheme)))
        return best

    # -- resurgence ------------------------------------------------------------

    def lambda_value(self, I: MonomialIdeal, r: int, scheme: SymbolicScheme) -> int:
        """
        λ_r = max{s : I^(s) ⊄ I^r}. Containment is upward closed in s, so the
        first contained s found searching upward from r is λ_r + 1.
        """
        h = self.big_height(scheme)
        guaranteed = I.is_squarefree or scheme.mode is SymbolicMode.ASSOCIATED
        limit = h * r if guaranteed else 2 * h * r
        s = r
        while s < limit:
            if self.symbolic_containment(I, s, r, scheme).holds:
                return s - 1
            s += 1
        if guaranteed:
            return limit - 1
        if self.symbolic_containment(I, limit, r, scheme).holds:
            return limit - 1
        raise ResourceCapError(
            f"λ_{r} search passed I^({limit})", cap=limit, observed=limit, resource="symbolic exponent"
        )

    def lambdas(
        self, I: MonomialIdeal, r_values: Sequence[int], scheme: SymbolicScheme
    ) -> Dict[int, int]:
        values = self.parallel([lambda r=r: self.lambda_value(I, r, scheme) for r in r_values])
        return dict(zip(r_values, values))

    def _test(
        self,
        I: MonomialIdeal,
        pairs: Sequence[Pair],
        scheme: SymbolicScheme,
        tested: Dict[Pair, Containment],
    ) -> List[CandidateTest]:
        fresh = [p for p in pairs if p not in tested]
        outcomes = self.parallel(
            [lambda p=p: self.symbolic_containment(I, p[0], p[1], scheme) for p in fresh]
        )
        tested.update(zip(fresh, outcomes))
        return [CandidateTest(s, r, tested[(s, r)].holds, tested[(s, r)].witness) for s, r in pairs]

    def _witness_search(
        self,
        I: MonomialIdeal,
        scheme: SymbolicScheme,
        rho_hat: Fraction,
        b: int,
        search_cap: int,
        tested: Dict[Pair, Containment],
    ) -> Optional[Pair]:
        for r in range(2, search_cap + 1):
            top = _below((r + b) * rho_hat)
            bottom = _above(rho_hat * r)
            for s in range(top, bottom - 1, -1):
                (outcome,) = self._test(I, [(s, r)], scheme, tested)
                self.debug(f"I^({s}) {'⊆' if outcome.contained else '⊄'} I^{r}", 2)
                if not outcome.contained:
                    return s, r
        return None

    def box(self, witness: Pair, rho_hat: Fraction, b: int) -> tuple[Fraction, List[Pair]]:
        """
        The remaining pairs that can beat the witness: 2 ≤ r < N,
        r + 1 ≤ s < (r + b)·ρ̂ and s/r > s0/r0, with N = b·ρ̂/(s0/r0 - ρ̂).
        """
        s0, r0 = witness
        ratio = Fraction(s0, r0)
        N = b * rho_hat / (ratio - rho_hat)
        pairs = []
        r = 2
        while r < N:
            for s in range(r + 1, _below((r + b) * rho_hat) + 1):
                if Fraction(s, r) > ratio:
                    pairs.append((s, r))
            r += 1
        return N, pairs

    def resurgence(
        self,
        I: MonomialIdeal,
        scheme: Optional[SymbolicScheme] = None,
        search_cap: Optional[int] = None,
    ) -> ResurgenceResult:
        """
        Resurgence ρ(I) by a witness search followed by a finite box.

        A witness I^(s0) ⊄ I^r0 with s0/r0 > ρ̂ bounds every better pair inside
        the box, which makes the answer exact. Without one up to the search cap
        the result is the interval between the best λ_r/r and
        (1 + b/(R+1))·ρ̂. Normal ideals have ρ = ρ̂.
        """
        scheme = self.symbolic.scheme(I, scheme)
        search_cap = search_cap or self.search_cap
        h = self.big_height(scheme)
        asymptotic = self.asymptotic_resurgence(I, scheme)
        profile = self.profile(I)
        b = profile.b_value
        caveats = self.caveats(I)
        if not profile.rees_verified:
            caveats.append(UNVERIFIED_REES_CAVEAT)

        result = ResurgenceResult(
            rho_hat=asymptotic,
            lower=asymptotic.lower,
            upper=Fraction(h),
            status=ResurgenceStatus.INTERVAL,
            b=b,
            h=h,
            caveats=caveats,
        )
        tested: Dict[Pair, Containment] = {}
        try:
            if not asymptotic.exact:
                caveats.append(BOUNDED_RHO_HAT_CAVEAT)
                self._bracket_from_lambdas(I, scheme, search_cap, result, cap_upper=Fraction(h))
            elif b == 0:
                self.info(f"{I} is normal, ρ = ρ̂", 1)
                result.upper = result.lower
                result.status = ResurgenceStatus.EXACT
            else:
                self._search(I, scheme, search_cap, result, tested)
        except ResourceCapError as e:
            self.error(f"Resurgence search stopped: {e}", 1)
            noncontained = [(s, r) for (s, r), c in tested.items() if not c.holds]
            result.noncontainments = _order(noncontained)
            result.lower = max([asymptotic.lower] + [Fraction(s, r) for s, r in noncontained])
            result.upper = max(result.lower, Fraction(h))
            result.status = ResurgenceStatus.CAPPED
        return result

    def _search(
        self,
        I: MonomialIdeal,
        scheme: SymbolicScheme,
        search_cap: int,
        result: ResurgenceResult,
        tested: Dict[Pair, Containment],
    ) -> None:
        rho_hat = result.rho_hat.lower
        b = result.b
        self.info(f"Searching witnesses for {I} up to r = {search_cap} (b = {b})", 1)
        witness = self._witness_search(I, scheme, rho_hat, b, search_cap, tested)
        if witness is None:
            self.info(f"No witness up to r = {search_cap}, bracketing ρ", 1)
            upper = (1 + Fraction(b, search_cap + 1)) * result.rho_hat.upper
            self._bracket_from_lambdas(I, scheme, search_cap, result, cap_upper=upper)
            return

        N, pairs = self.box(witness, rho_hat, b)
        self.info(f"Witness {witness}, N = {N}, {len(pairs)} box candidates", 1)
        result.witness = witness
        result.N = N
        result.candidates = self._test(I, pairs, scheme, tested)
        noncontained = [witness] + [(c.s, c.r) for c in result.candidates if not c.contained]
        best = max(Fraction(s, r) for s, r in noncontained)
        result.noncontainments = _order(noncontained)
        result.maximizing_pairs = [p for p in result.noncontainments if Fraction(*p) == best]
        result.lower = result.upper = best
        result.status = ResurgenceStatus.EXACT

    def _bracket_from_lambdas(
        self,
        I: MonomialIdeal,
        scheme: SymbolicScheme,
        search_cap: int,
        result: ResurgenceResult,
        cap_upper: Fraction,
    ) -> None:
        rho_hat = result.rho_hat.lower
        lambdas = self.lambdas(I, list(range(1, search_cap + 1)), scheme)
        result.lambdas = lambdas
        noncontained = [(lam, r) for r, lam in lambdas.items() if lam >= 1]
        best = max((Fraction(s, r) for s, r in noncontained), default=Fraction(0))
        result.noncontainments = _order(noncontained)
        result.maximizing_pairs = [p for p in result.noncontainments if Fraction(*p) == best]
        result.lower = max(rho_hat, best)
        result.upper = min(Fraction(result.h), max(best, cap_upper))
        result.status = ResurgenceStatus.INTERVAL

        if result.rho_hat.exact:
            for s, r in noncontained:
                if Fraction(s, r) > rho_hat and not s < (r + result.b) * rho_hat:
                    self.error(f"Noncontainment ({s}, {r}) lies outside the b band", 1)
                    result.caveats.append(f"noncontainment ({s}, {r}) outside the b band")

    # -- bounds and certificates -------------------------------------------------

    def gamma_bound(
        self,
        I: MonomialIdeal,
        n: int,
        scheme: Optional[SymbolicScheme] = None,
        predict_upto: Optional[int] = None,
    ) -> GammaBound:
        """
        ρ(I) ≤ 1/v with v = min{Σ γ_k·y_k : Σ k·y_k = 1, y ≥ 0}, where γ_i is
        the largest r with I^(i) ⊆ I^r. Also predicts γ_s for s ≤ predict_upto
        from the integral version of the same program.
        """
        if n < 1:
            raise ValueError("n must be positive")
        scheme = self.symbolic.scheme(I, scheme)

        def gamma(i: int) -> int:
            r = 0
            while r < i and self.symbolic_containment(I, i, r + 1, scheme).holds:
                r += 1
            return r

        gammas = dict(zip(range(1, n + 1), self.parallel([lambda i=i: gamma(i) for i in range(1, n + 1)])))
        lp = LinearProgram.of(
            [gammas[k] for k in range(1, n + 1)],
            [Constraint.of(range(1, n + 1), 1, Sense.EQ)],
        )
        v = lp_minimize(lp).value
        bound = 1 / v if v > 0 else None

        predicted: Dict[int, int] = {}
        if predict_upto:
            best = [0] * (predict_upto + 1)
            for s in range(1, predict_upto + 1):
                best[s] = min(gammas[k] + best[s - k] for k in range(1, min(n, s) + 1))
                predicted[s] = best[s]
        self.info(f"γ = {gammas}, v = {v}", 1)
        return GammaBound(
            n=n, table=ContainmentTable(gamma=gammas), v=v, bound=bound, predicted=predicted
        )

    def rho_hat_from_containment(
        self, I: MonomialIdeal, s: int, r: int, scheme: Optional[SymbolicScheme] = None
    ) -> BoundCertificate:
        """
        ρ̂(I) ≤ (s + h)/r once I^(s+1) ⊆ closure(I^r) is verified.
        """
        scheme = self.symbolic.scheme(I, scheme)
        h = self.big_height(scheme)
        hypothesis = f"I^({s + 1}) ⊆ closure(I^{r})"
        check = self.closure_containment(I, s + 1, r, scheme)
        if not check.holds:
            raise HypothesisFailedError(
                f"Hypothesis {hypothesis} fails", witness=check.witness, hypothesis=hypothesis
            )
        return BoundCertificate(
            kind="closure-containment",
            s=s,
            r=r,
            h=h,
            value=Fraction(s + h, r),
            strict=False,
            hypothesis=hypothesis,
            caveats=tuple(self.caveats(I)),
        )

    def expected_resurgence_certificate(
        self, I: MonomialIdeal, r_max: int, scheme: Optional[SymbolicScheme] = None
    ) -> Optional[ExpectedCertificate]:
        """
        The least r ≤ r_max with I^(rh-h) ⊆ closure(I^r); its existence gives ρ(I) < h.
        """
        scheme = self.symbolic.scheme(I, scheme)
        h = self.big_height(scheme)
        if h < 2:
            return None
        for r in range(2, r_max + 1):
            if self.closure_containment(I, r * h - h, r, scheme).holds:
                self.info(f"I^({r * h - h}) ⊆ closure(I^{r}): ρ < {h}", 1)
                return ExpectedCertificate(r=r, s=r * h - h, h=h)
        return None

    def _verify_product(
        self,
        I: MonomialIdeal,
        s: int,
        r: int,
        J: MonomialIdeal,
        scheme: SymbolicScheme,
        hypothesis: str,
    ) -> None:
        A = self.symbolic.symbolic_power(I, s + 1, scheme)
        for m in A.generators:
            if not self._in_product_with_closure(m, J, I, r):
                raise HypothesisFailedError(
                    f"Hypothesis {hypothesis} fails", witness=m, hypothesis=hypothesis
                )

    def strict_bound(
        self,
        I: MonomialIdeal,
        s: Optional[int],
        r: int,
        scheme: Optional[SymbolicScheme] = None,
        expected: bool = False,
    ) -> BoundCertificate:
        """
        ρ̂(I) < (s + h)/r once I^(s+1) ⊆ J·closure(I^r) holds, J being the
        intersection of the embedded Rees centers. With expected set, s is
        rh - h and the certificate also gives ρ(I) < h.
        """
        scheme = self.symbolic.scheme(I, scheme)
        h = self.big_height(scheme)
        if expected:
            s = r * h - h
        if s is None:
            raise ValueError("s is required unless expected is set")
        J = self.center_ideal(I)
        caveats = tuple(self.caveats(I))
        if J.is_unit:
            return BoundCertificate(
                kind="minimal-centers",
                s=s,
                r=r,
                h=h,
                value=Fraction(1),
                strict=False,
                hypothesis="every Rees valuation is centered on a minimal prime",
                center_ideal=J,
                caveats=caveats,
            )
        hypothesis = f"I^({s + 1}) ⊆ J·closure(I^{r})"
        self._verify_product(I, s, r, J, scheme, hypothesis)
        return BoundCertificate(
            kind="strict",
            s=s,
            r=r,
            h=h,
            value=Fraction(s + h, r),
            strict=True,
            hypothesis=hypothesis,
            center_ideal=J,
            certifies_expected=expected,
            caveats=caveats,
        )

    def chudnovsky_type_bound(
        self,
        I: MonomialIdeal,
        s: int,
        r: int,
        C: int,
        scheme: Optional[SymbolicScheme] = None,
    ) -> ChudnovskyReport:
        """
        From I^(s+1) ⊆ J^(rC)·closure(I^r), every Rees valuation satisfies
        ν̂_w(I) ≥ r·(ν_w(I) + C·ν_w(J))/(s + h); each implied bound is checked
        against the computed ν̂.
        """
        if C < 0:
            raise ValueError("C must be nonnegative")
        scheme = self.symbolic.scheme(I, scheme)
        h = self.big_height(scheme)
        J = self.center_ideal(I)
        hypothesis = f"I^({s + 1}) ⊆ J^{r * C}·closure(I^{r})"
        self._verify_product(I, s, r, power(J, r * C, self.generator_cap), scheme, hypothesis)

        rows = []
        for w in rees_valuations(I):
            hat = self._nu_hat(I, w, scheme)
            nu_I = nu(I, w)
            nu_J = nu(J, w)
            implied = Fraction(r * (nu_I + C * nu_J), s + h)
            rows.append(
                ChudnovskyRow(
                    weight=w.normal,
                    nu_I=nu_I,
                    nu_J=nu_J,
                    implied=implied,
                    nu_hat=hat.value,
                    nu_hat_exact=hat.exact,
                    consistent=implied <= hat.value,
                )
            )
        return ChudnovskyReport(s=s, r=r, C=C, h=h, center_ideal=J, rows=tuple(rows))

    def lambda_brackets(
        self,
        I: MonomialIdeal,
        r_values: Sequence[int],
        scheme: Optional[SymbolicScheme] = None,
    ) -> LambdaBrackets:
        """
        Per r: λ_r/(r+b) < ρ̂ ≤ (λ_r+h)/r and λ_r/r ≤ ρ ≤ (λ_r+h)/r·(1 + b/2),
        with the envelopes over all requested r.
        """
        if not r_values:
            raise ValueError("At least one r is required")
        scheme = self.symbolic.scheme(I, scheme)
        h = self.big_height(scheme)
        b = self.profile(I).b_value
        lambdas = self.lambdas(I, list(r_values), scheme)
        brackets = tuple(
            LambdaBracket(
                r=r,
                lam=lam,
                rho_hat_lower=Fraction(lam, r + b),
                rho_hat_upper=Fraction(lam + h, r),
                rho_lower=Fraction(lam, r),
                rho_upper=Fraction(lam + h, r) * (1 + Fraction(b, 2)),
            )
            for r, lam in lambdas.items()
        )
        envelope = (
            max(x.rho_hat_lower for x in brackets),
            min(x.rho_hat_upper for x in brackets),
        )
        rho_envelope = (
            max(x.rho_lower for x in brackets),
            min(x.rho_upper for x in brackets),
        )
        contains = None
        asymptotic = self.asymptotic_resurgence(I, scheme)
        if asymptotic.exact:
            contains = envelope[0] <= asymptotic.lower <= envelope[1]
        return LambdaBrackets(
            table=ContainmentTable(lambda_=lambdas),
            brackets=brackets,
            envelope=envelope,
            rho_envelope=rho_envelope,
            b=b,
            h=h,
            contains_rho_hat=contains,
        )

    def containment_profile(
        self,
        I: MonomialIdeal,
        components: Sequence[MonomialIdeal],
        r_values: Iterable[int],
    ) -> List[EnvelopeCheck]:
        """
        For each component Q and r, where π(Q)^(r-1) sits: in the bracket
        envelope, in I^r, in closure(I^r).
        """
        checks = []
        for r in r_values:
            envelope = bracket_envelope(components, r)
            for index, Q in enumerate(components):
                m = tuple((r - 1) * e for e in pi(Q))
                checks.append(
                    EnvelopeCheck(
                        r=r,
                        component=index,
                        monomial=m,
                        in_envelope=contains_monomial(envelope, m),
                        in_power=monomial_in_power(m, I, r),
                        in_closure=in_closure(m, I, r),
                    )
                )
        return checks
