from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer

from sympow.report import certificate_dict, chudnovsky_dict
from sympow.system.config import get_config
from sympow.system.tasks.common import (
    IDEAL_OPTION,
    OUT_OPTION,
    TIMING_OPTION,
    run_command,
    scheme_from,
)


def certify_expected(
    ctx: typer.Context,
    r_max: int = typer.Option(10, "--r-max", min=2, help="Largest r to try"),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        scheme = scheme_from(doc, I, get_config(ctx))
        found = engine.expected_resurgence_certificate(I, r_max, scheme)
        h = engine.big_height(scheme)
        report.results = {
            "h": h,
            "certificate": None if found is None else {"r": found.r, "s": found.s},
            "expected_resurgence": found is not None,
        }
        if found is None:
            report.status = "not-found"

    run_command(ctx, "certify-expected", ideal, out, timing, {"r_max": r_max}, compute)


def closure_bound(
    ctx: typer.Context,
    s: int = typer.Argument(..., min=0),
    r: int = typer.Argument(..., min=1),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        certificate = engine.rho_hat_from_containment(I, s, r, scheme_from(doc, I, get_config(ctx)))
        report.results = certificate_dict(certificate)

    run_command(ctx, "closure-bound", ideal, out, timing, {"s": s, "r": r}, compute)


def strict_bound(
    ctx: typer.Context,
    s: int = typer.Argument(..., min=0),
    r: int = typer.Argument(..., min=1),
    expected: bool = typer.Option(
        False, "--expected", help="Use s = rh - h and certify ρ(I) < h"
    ),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        certificate = engine.strict_bound(
            I, s, r, scheme_from(doc, I, get_config(ctx)), expected=expected
        )
        report.results = certificate_dict(certificate)

    run_command(
        ctx, "strict-bound", ideal, out, timing, {"s": s, "r": r, "expected": expected}, compute
    )


def chudnovsky(
    ctx: typer.Context,
    s: int = typer.Argument(..., min=0),
    r: int = typer.Argument(..., min=1),
    C: int = typer.Argument(..., min=0),
    ideal: Path = IDEAL_OPTION,
    out: Optional[Path] = OUT_OPTION,
    timing: bool = TIMING_OPTION,
):
    def compute(doc, I, engine, report):
        result = engine.chudnovsky_type_bound(I, s, r, C, scheme_from(doc, I, get_config(ctx)))
        report.results = chudnovsky_dict(result, I.ring)
        if not result.consistent:
            report.status = "inconsistent"

    run_command(ctx, "chudnovsky", ideal, out, timing, {"s": s, "r": r, "C": C}, compute)
