from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import typer

from sympow.closure.engine import closure_power
from sympow.monomial.decomposition import decompose, irreducible_decomposition
from sympow.monomial.ideal import ideal_containment
from sympow.report import (
    asymptotic_dict,
    decomposition_dict,
    k_statistics_dict,
    nu_hat_dict,
    power_tests_dict,
    checks_dict,
    profile_dict,
    rational,
    rees_degree_dict,
    shortcut_dict,
)
from sympow.symbolic.engine import SymbolicMode, scheme_for
from sympow.system.config import get_config
from sympow.system.tasks.common import (
    IDEAL_OPTION,
    OUT_OPTION,
    TIMING_OPTION,
    run_command,
    scheme_from,
)


def asymptotic(
    ctx: typer.Context,
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        scheme = scheme_from(doc, I, get_config(ctx))
        result = engine.asymptotic_resurgence(I, scheme)
        report.results = asymptotic_dict(result, I.ring)
        if doc.generating_degree is not None:
            report.results["rho_hat_from_generating_degree"] = rational(
                engine.rho_hat_from_generating_degree(I, doc.generating_degree, scheme)
            )
        report.status = "exact" if result.exact else "interval"

    run_command(ctx, "asymptotic", ideal, out, timing, {}, compute)


def waldschmidt(
    ctx: typer.Context,
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        hat = engine.symbolic.waldschmidt(I, scheme_from(doc, I, get_config(ctx)))
        report.results = {"waldschmidt": nu_hat_dict(hat)}
        report.status = "exact" if hat.exact else "upper-bound"

    run_command(ctx, "waldschmidt", ideal, out, timing, {}, compute)


def b_value(
    ctx: typer.Context,
    ideal: Path = IDEAL_OPTION,
    k_max: int = typer.Option(0, "--k-max", help="Also report K_r for r up to this value"),
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        profile = engine.profile(I)
        report.results = profile_dict(profile)
        if k_max > 0:
            report.results["k_statistics"] = k_statistics_dict(
                engine.closure.K_statistics(I, k_max, profile)
            )
        if not profile.rees_verified:
            report.status = "unverified-cap"

    run_command(ctx, "b", ideal, out, timing, {"k_max": k_max}, compute)


def rees_degree(
    ctx: typer.Context,
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        degree = engine.closure.rees_generation_degree(I, engine.rees_cap, engine.rees_window)
        report.results = rees_degree_dict(degree)
        if not degree.verified:
            report.status = "unverified-cap"

    run_command(ctx, "rees-degree", ideal, out, timing, {}, compute)


def decomposition(
    ctx: typer.Context,
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        report.results = decomposition_dict(decompose(I), I.ring)

    run_command(ctx, "decompose", ideal, out, timing, {}, compute)


def closure(
    ctx: typer.Context,
    r: int = typer.Argument(..., min=0, help="Power of the ideal"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        J = closure_power(I, r, engine.generator_cap)
        check = ideal_containment(J, I, r)
        report.results = {
            "generators": J.render(),
            "count": len(J),
            "equals_power": check.holds,
            "outside_power": None if check.holds else I.ring.render(check.witness),
        }

    run_command(ctx, "closure", ideal, out, timing, {"r": r}, compute)


def symbolic(
    ctx: typer.Context,
    s: int = typer.Argument(..., min=0, help="Symbolic exponent"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        scheme = scheme_from(doc, I, get_config(ctx))
        J = engine.symbolic.symbolic_power(I, s, scheme)
        ordinary = ideal_containment(J, I, s)
        report.parameters["mode"] = scheme.mode.value
        report.results = {
            "generators": J.render(),
            "count": len(J),
            "equals_power": ordinary.holds,
            "outside_power": None if ordinary.holds else I.ring.render(ordinary.witness),
        }
        if not I.is_squarefree and scheme.mode is SymbolicMode.ASSOCIATED:
            minimal = engine.symbolic.symbolic_power(I, s, scheme_for(I, SymbolicMode.MINIMAL))
            if minimal != J:
                report.results["minprimes_generators"] = minimal.render()

    run_command(ctx, "symbolic", ideal, out, timing, {"s": s}, compute)


def noetherian(
    ctx: typer.Context,
    c_max: int = typer.Argument(..., min=1, help="Largest i in (I^(i))^2 = I^(2i)"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        scheme = scheme_from(doc, I, get_config(ctx))
        tests = engine.symbolic.noetherian_power_test(I, scheme, c_max)
        report.results = {"tests": power_tests_dict(tests, I.ring)}
        if doc.c_value is not None:
            shortcut = engine.symbolic.c_shortcut(
                I, scheme, doc.c_value, c_max, weights=[(1,) * I.ngens]
            )
            report.results["c_shortcut"] = shortcut_dict(shortcut, I.ring)

    run_command(ctx, "noetherian", ideal, out, timing, {"c_max": c_max}, compute)


def envelope(
    ctx: typer.Context,
    r_values: List[int] = typer.Argument(..., help="Values of r to check"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        components = doc.component_ideals()
        if not components:
            components = irreducible_decomposition(I)
        checks = engine.containment_profile(I, components, r_values)
        report.results = {
            "components": [Q.render() for Q in components],
            "checks": checks_dict(checks, I.ring),
        }

    run_command(ctx, "envelope", ideal, out, timing, {"r": list(r_values)}, compute)
