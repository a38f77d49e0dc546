from __future__ import annotations

from datetime import datetime
from pathlib import Path
from typing import Callable, Optional

import typer

from sympow.document import IdealDocument
from sympow.errors import HypothesisFailedError, ResourceCapError, SympowError
from sympow.monomial.types import MonomialIdeal
from sympow.report import Report
from sympow.resurgence.engine import ResurgenceEngine
from sympow.symbolic.engine import SymbolicScheme, scheme_for
from sympow.system.config import Config, get_config, logger

IDEAL_OPTION = typer.Option(..., "--ideal", "-i", help="Ideal file, or the name of a fixture")
OUT_OPTION = typer.Option(None, "--out", "-o", help="Write the report here instead of stdout")
TIMING_OPTION = typer.Option(False, "--timing", help="Add elapsed milliseconds to the report")

Compute = Callable[[IdealDocument, MonomialIdeal, ResurgenceEngine, Report], None]


def scheme_from(doc: IdealDocument, I: MonomialIdeal, settings: Config) -> SymbolicScheme:
    components = doc.component_ideals() if settings.mode == "components" else ()
    return scheme_for(
        I,
        settings.mode,
        components=components,
        generating_degree=doc.generating_degree,
        c_value=doc.c_value,
    )


def run_command(
    ctx: typer.Context,
    command: str,
    ideal_path: Path,
    out: Optional[Path],
    timing: bool,
    parameters: dict,
    compute: Compute,
) -> None:
    """
    Load the ideal, run one computation and emit its report.

    Exit codes: 0 on success (capped searches included), 2 when a hypothesis
    fails, 1 on any other error.
    """
    settings = get_config(ctx)

    start_time = datetime.now()
    logger.info(f"Starting {command} task")

    try:
        doc = settings.load_document(ideal_path)
        I = doc.ideal()
    except (OSError, SympowError) as e:
        logger.error(f"Could not load ideal {ideal_path}: {e}")
        raise typer.Exit(code=1)

    report = Report(command=command, ideal=I, parameters=parameters)
    code = 0
    try:
        compute(doc, I, settings.engine(), report)
    except HypothesisFailedError as e:
        logger.warning(f"Hypothesis failed: {e}")
        report.status = "hypothesis-failed"
        report.results = {
            "hypothesis": e.hypothesis,
            "witness": None if e.witness is None else I.ring.render(e.witness),
        }
        code = 2
    except ResourceCapError as e:
        logger.warning(f"Resource cap reached: {e}")
        report.status = "capped"
        report.results = {"resource": e.resource, "cap": e.cap, "observed": e.observed}
    except (SympowError, ValueError) as e:
        logger.error(f"{command} failed: {e}", exc_info=True)
        raise typer.Exit(code=1)

    elapsed = int((datetime.now() - start_time).total_seconds() * 1000)
    if timing:
        report.timing_ms = elapsed
    try:
        text = report.write(out)
    except OSError as e:
        logger.error(f"Failed to write report: {e}")
        raise typer.Exit(code=1)
    if out is None:
        typer.echo(text, nl=False)
    else:
        logger.info(f"Report written to {out}")

    logger.info(f"Done: {command} task completed in {elapsed}ms.")
    if code:
        raise typer.Exit(code=code)
