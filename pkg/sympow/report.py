from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, Sequence

from sympow.closure.engine import ClosureProfile, KStatistics, ReesDegree
from sympow.monomial.types import DecompositionReport, MonomialIdeal, Ring
from sympow.polyhedra.newton import Halfspace
from sympow.resurgence.types import (
    AsymptoticResurgence,
    BoundCertificate,
    ChudnovskyReport,
    EnvelopeCheck,
    GammaBound,
    LambdaBrackets,
    ResurgenceResult,
)
from sympow.symbolic.engine import CShortcut, NuHat, PowerEquality, ValuationProfile


def rational(x: Fraction | int) -> str:
    """Canonical "p/q" form, so 1 is "1/1"."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def optional_rational(x: Optional[Fraction]) -> Optional[str]:
    return None if x is None else rational(x)


def pair(p: Optional[Sequence[int]]) -> Optional[Dict[str, int]]:
    return None if p is None else {"s": p[0], "r": p[1]}


def gens(ideal: MonomialIdeal) -> list[str]:
    return ideal.render()


@dataclass
class Report:
    command: str
    ideal: MonomialIdeal
    parameters: Dict[str, Any] = field(default_factory=dict)
    results: Dict[str, Any] = field(default_factory=dict)
    status: str = "ok"
    timing_ms: Optional[int] = None

    def as_dict(self) -> Dict[str, Any]:
        data = {
            "command": self.command,
            "input": {
                "vars": list(self.ideal.ring.variables),
                "gens": gens(self.ideal),
            },
            "parameters": self.parameters,
            "results": self.results,
            "status": self.status,
        }
        if self.timing_ms is not None:
            data["timing_ms"] = self.timing_ms
        return data

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"

    def write(self, out: Optional[Path]) -> str:
        text = self.to_json()
        if out is not None:
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(text, encoding="utf-8")
        return text


def weight_dict(w: Halfspace, ring: Ring) -> Dict[str, Any]:
    return {
        "normal": list(w.normal),
        "offset": w.offset,
        "inequality": w.render(ring),
        "center": w.center.render(ring),
    }


def valuation_dict(p: ValuationProfile, ring: Ring) -> Dict[str, Any]:
    return {
        "weight": weight_dict(p.weight, ring),
        "nu": p.nu_I,
        "nu_hat": rational(p.nu_hat),
        "ratio": rational(p.ratio),
        "exact": p.exact,
        "center_is_minimal": p.center_is_minimal,
    }


def asymptotic_dict(a: AsymptoticResurgence, ring: Ring) -> Dict[str, Any]:
    return {
        "rho_hat": optional_rational(a.value),
        "lower": rational(a.lower),
        "upper": rational(a.upper),
        "exact": a.exact,
        "valuations": [valuation_dict(p, ring) for p in a.profiles],
    }


def nu_hat_dict(hat: NuHat) -> Dict[str, Any]:
    data: Dict[str, Any] = {"value": rational(hat.value), "exact": hat.exact, "method": hat.method}
    if hat.sequence:
        data["sequence"] = {str(s): rational(v) for s, v in hat.sequence}
    return data


def resurgence_dict(res: ResurgenceResult, ring: Ring) -> Dict[str, Any]:
    return {
        "rho": optional_rational(res.rho),
        "lower": rational(res.lower),
        "upper": rational(res.upper),
        "rho_hat": asymptotic_dict(res.rho_hat, ring),
        "status": res.status.value,
        "b": res.b,
        "h": res.h,
        "witness": pair(res.witness),
        "N": optional_rational(res.N),
        "noncontainments": [pair(p) for p in res.noncontainments],
        "maximizing_pairs": [pair(p) for p in res.maximizing_pairs],
        "candidates": [
            {
                "s": c.s,
                "r": c.r,
                "contained": c.contained,
                "witness": None if c.witness is None else ring.render(c.witness),
            }
            for c in res.candidates
        ],
        "lambda": {str(r): lam for r, lam in sorted(res.lambdas.items())},
        "caveats": list(res.caveats),
    }


def profile_dict(p: ClosureProfile) -> Dict[str, Any]:
    return {
        "b": p.b_value,
        "rees_degree": p.rees_degree,
        "rees_verified": p.rees_verified,
        "briancon_skoda_cap": p.briancon_skoda_cap,
        "normal": p.is_normal,
    }


def rees_degree_dict(d: ReesDegree) -> Dict[str, Any]:
    return {"degree": d.degree, "verified": d.verified}


def k_statistics_dict(k: KStatistics) -> Dict[str, Any]:
    return {
        "K": {str(r): value for r, value in k.values},
        "k_estimate": rational(k.k_estimate),
        "k_bound": optional_rational(k.k_bound),
    }


def decomposition_dict(d: DecompositionReport, ring: Ring) -> Dict[str, Any]:
    return {
        "minimal_primes": [P.render(ring) for P in d.minimal_primes],
        "associated_primes": [P.render(ring) for P in d.associated_primes],
        "embedded_primes": [P.render(ring) for P in d.embedded_primes],
        "irreducible_components": [Q.render() for Q in d.irreducible_components],
        "big_height": d.big_height,
    }


def gamma_dict(g: GammaBound) -> Dict[str, Any]:
    return {
        "gamma": {str(i): v for i, v in sorted(g.gammas.items())},
        "v": rational(g.v),
        "bound": optional_rational(g.bound),
        "predicted_gamma": {str(s): v for s, v in sorted(g.predicted.items())},
    }


def certificate_dict(c: BoundCertificate) -> Dict[str, Any]:
    return {
        "kind": c.kind,
        "s": c.s,
        "r": c.r,
        "h": c.h,
        "bound": rational(c.value),
        "strict": c.strict,
        "hypothesis": c.hypothesis,
        "center_ideal": None if c.center_ideal is None else c.center_ideal.render(),
        "certifies_expected": c.certifies_expected,
        "caveats": list(c.caveats),
    }


def lambda_dict(brackets: LambdaBrackets) -> Dict[str, Any]:
    return {
        "b": brackets.b,
        "h": brackets.h,
        "lambda": {str(r): lam for r, lam in brackets.table.lambda_.items()},
        "brackets": [
            {
                "r": x.r,
                "lambda": x.lam,
                "rho_hat_lower": rational(x.rho_hat_lower),
                "rho_hat_upper": rational(x.rho_hat_upper),
                "rho_lower": rational(x.rho_lower),
                "rho_upper": rational(x.rho_upper),
            }
            for x in brackets.brackets
        ],
        "envelope": [rational(x) for x in brackets.envelope],
        "rho_envelope": [rational(x) for x in brackets.rho_envelope],
        "contains_rho_hat": brackets.contains_rho_hat,
    }


def chudnovsky_dict(c: ChudnovskyReport, ring: Ring) -> Dict[str, Any]:
    return {
        "s": c.s,
        "r": c.r,
        "C": c.C,
        "h": c.h,
        "center_ideal": c.center_ideal.render(),
        "consistent": c.consistent,
        "valuations": [
            {
                "normal": list(row.weight),
                "nu": row.nu_I,
                "nu_J": row.nu_J,
                "implied_nu_hat_lower": rational(row.implied),
                "nu_hat": rational(row.nu_hat),
                "nu_hat_exact": row.nu_hat_exact,
                "consistent": row.consistent,
            }
            for row in c.rows
        ],
    }


def power_tests_dict(tests: Iterable[PowerEquality], ring: Ring) -> list[Dict[str, Any]]:
    return [
        {
            "i": t.index,
            "equal": t.equal,
            "witness": None if t.witness is None else ring.render(t.witness),
        }
        for t in tests
    ]


def shortcut_dict(c: CShortcut, ring: Ring) -> Dict[str, Any]:
    return {
        "c": c.c,
        "tested_up_to": c.tested_up_to,
        "holds": c.holds,
        "failure": None
        if c.failure is None
        else {"n": c.failure[0], "witness": ring.render(c.failure[1])},
        "nu_hat": {",".join(map(str, w)): rational(v) for w, v in c.values.items()},
    }


def checks_dict(checks: Iterable[EnvelopeCheck], ring: Ring) -> list[Dict[str, Any]]:
    return [
        {
            "r": p.r,
            "component": p.component,
            "monomial": ring.render(p.monomial),
            "in_envelope": p.in_envelope,
            "in_power": p.in_power,
            "in_closure": p.in_closure,
        }
        for p in checks
    ]
