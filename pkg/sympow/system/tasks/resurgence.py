from __future__ import annotations

from pathlib import Path
from typing import List, Optional

import typer

from sympow.report import gamma_dict, lambda_dict, resurgence_dict
from sympow.system.config import get_config
from sympow.system.tasks.common import (
    IDEAL_OPTION,
    OUT_OPTION,
    TIMING_OPTION,
    run_command,
    scheme_from,
)


def resurgence(
    ctx: typer.Context,
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    settings = get_config(ctx)

    def compute(doc, I, engine, report):
        result = engine.resurgence(I, scheme_from(doc, I, settings))
        report.results = resurgence_dict(result, I.ring)
        report.status = result.status.value

    run_command(
        ctx, "resurgence", ideal, out, timing, {"search_cap": settings.search_cap}, compute
    )


def containment(
    ctx: typer.Context,
    s: int = typer.Argument(..., min=0, help="Symbolic exponent"),
    r: int = typer.Argument(..., min=0, help="Ordinary exponent"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        scheme = scheme_from(doc, I, get_config(ctx))
        check = engine.symbolic_containment(I, s, r, scheme)
        closure = engine.closure_containment(I, s, r, scheme)
        report.results = {
            "contained": check.holds,
            "witness": None if check.holds else I.ring.render(check.witness),
            "in_closure": closure.holds,
            "mode": scheme.mode.value,
        }

    run_command(ctx, "containment", ideal, out, timing, {"s": s, "r": r}, compute)


def lambdas(
    ctx: typer.Context,
    r_values: List[int] = typer.Argument(..., help="Values of r"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        brackets = engine.lambda_brackets(I, list(r_values), scheme_from(doc, I, get_config(ctx)))
        report.results = lambda_dict(brackets)

    run_command(ctx, "lambda", ideal, out, timing, {"r": list(r_values)}, compute)


def gamma(
    ctx: typer.Context,
    n: int = typer.Argument(..., min=1, help="Largest i with γ_i computed"),
    predict: int = typer.Option(0, "--predict", help="Predict γ_s for s up to this value"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        bound = engine.gamma_bound(
            I, n, scheme_from(doc, I, get_config(ctx)), predict_upto=predict or None
        )
        report.results = gamma_dict(bound)

    run_command(ctx, "gamma", ideal, out, timing, {"n": n, "predict": predict}, compute)
