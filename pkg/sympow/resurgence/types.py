from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from sympow.monomial.types import Monomial, MonomialIdeal
from sympow.symbolic.engine import ValuationProfile

Pair = Tuple[int, int]

NON_RADICAL_CAVEAT = "height-based, see analytic-spread caveat"
UNVERIFIED_REES_CAVEAT = "rees generation degree unverified beyond cap"
BOUNDED_RHO_HAT_CAVEAT = "asymptotic resurgence only bounded, box search skipped"


class ResurgenceStatus(str, Enum):
    EXACT = "exact"
    INTERVAL = "interval"
    CAPPED = "capped"


@dataclass(frozen=True)
class AsymptoticResurgence:
    """ρ̂(I) = max ν_i(I)/ν̂_i(I) over the Rees valuations, or a bracket for it."""

    lower: Fraction
    upper: Fraction
    exact: bool
    profiles: tuple[ValuationProfile, ...]

    @property
    def value(self) -> Optional[Fraction]:
        return self.lower if self.exact else None


@dataclass(frozen=True)
class CandidateTest:
    s: int
    r: int
    contained: bool
    witness: Optional[Monomial] = None


@dataclass
class ResurgenceResult:
    """
    Outcome of the finite resurgence search.

    Pairs are (s, r) meaning I^(s) ⊄ I^r. When a witness with s/r > ρ̂ exists
    the value is exact; otherwise lower/upper bracket ρ.
    """

    rho_hat: AsymptoticResurgence
    lower: Fraction
    upper: Fraction
    status: ResurgenceStatus
    b: int
    h: int
    witness: Optional[Pair] = None
    N: Optional[Fraction] = None
    noncontainments: List[Pair] = field(default_factory=list)
    maximizing_pairs: List[Pair] = field(default_factory=list)
    candidates: List[CandidateTest] = field(default_factory=list)
    lambdas: Dict[int, int] = field(default_factory=dict)
    caveats: List[str] = field(default_factory=list)

    @property
    def rho(self) -> Optional[Fraction]:
        return self.lower if self.status is ResurgenceStatus.EXACT else None


@dataclass(frozen=True)
class ContainmentTable:
    """γ_i = max r with I^(i) ⊆ I^r, and λ_r = max s with I^(s) ⊄ I^r."""

    gamma: Dict[int, int] = field(default_factory=dict)
    lambda_: Dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True)
class GammaBound:
    n: int
    table: ContainmentTable
    v: Fraction
    bound: Optional[Fraction]
    predicted: Dict[int, int] = field(default_factory=dict)

    @property
    def gammas(self) -> Dict[int, int]:
        return self.table.gamma


@dataclass(frozen=True)
class BoundCertificate:
    """
    ρ̂(I) ≤ value (or < value when strict), proved by the verified containment
    named in hypothesis.
    """

    kind: str
    s: int
    r: int
    h: int
    value: Fraction
    strict: bool
    hypothesis: str
    center_ideal: Optional[MonomialIdeal] = None
    certifies_expected: bool = False
    caveats: tuple[str, ...] = ()


@dataclass(frozen=True)
class ExpectedCertificate:
    r: int
    s: int
    h: int


@dataclass(frozen=True)
class LambdaBracket:
    r: int
    lam: int
    rho_hat_lower: Fraction
    rho_hat_upper: Fraction
    rho_lower: Fraction
    rho_upper: Fraction


@dataclass(frozen=True)
class LambdaBrackets:
    table: ContainmentTable
    brackets: tuple[LambdaBracket, ...]
    envelope: tuple[Fraction, Fraction]
    rho_envelope: tuple[Fraction, Fraction]
    b: int
    h: int
    contains_rho_hat: Optional[bool] = None


@dataclass(frozen=True)
class ChudnovskyRow:
    weight: tuple[int, ...]
    nu_I: int
    nu_J: int
    implied: Fraction
    nu_hat: Fraction
    nu_hat_exact: bool
    consistent: bool


@dataclass(frozen=True)
class ChudnovskyReport:
    s: int
    r: int
    C: int
    h: int
    center_ideal: MonomialIdeal
    rows: tuple[ChudnovskyRow, ...]

    @property
    def consistent(self) -> bool:
        return all(row.consistent for row in self.rows)


@dataclass(frozen=True)
class EnvelopeCheck:
    r: int
    component: int
    monomial: Monomial
    in_envelope: bool
    in_power: bool
    in_closure: bool
