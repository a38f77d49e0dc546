from pathlib import Path

import typer
from rich import json

from sympow.symbolic.engine import SymbolicMode
from sympow.system.config import Config, get_config
from sympow.system.tasks import certificates, corpus, invariants, resurgence

app = typer.Typer(
    help="Symbolic powers, integral closures and resurgence of monomial ideals",
    no_args_is_help=True,
)

app.command(name="resurgence", help="Resurgence by witness search and finite box")(
    resurgence.resurgence
)
app.command(name="containment", help="Decide I^(s) ⊆ I^r")(resurgence.containment)
app.command(name="lambda", help="λ_r and the brackets it gives")(resurgence.lambdas)
app.command(name="gamma", help="Upper bound on resurgence from γ_1..γ_n")(resurgence.gamma)

app.command(name="asymptotic", help="Asymptotic resurgence from Rees valuations")(
    invariants.asymptotic
)
app.command(name="waldschmidt", help="Waldschmidt constant")(invariants.waldschmidt)
app.command(name="b", help="Briançon-Skoda type constant b(I)")(invariants.b_value)
app.command(name="rees-degree", help="Generation degree of the normalized Rees algebra")(
    invariants.rees_degree
)
app.command(name="decompose", help="Primes and irreducible components")(
    invariants.decomposition
)
app.command(name="closure", help="Integral closure of I^r")(invariants.closure)
app.command(name="symbolic", help="Symbolic power I^(s)")(invariants.symbolic)
app.command(name="noetherian", help="Compare (I^(i))^2 with I^(2i)")(invariants.noetherian)
app.command(name="envelope", help="Locate π(Q)^(r-1) in the bracket envelope")(
    invariants.envelope
)

app.command(name="certify-expected", help="Find r with I^(rh-h) ⊆ closure(I^r)")(
    certificates.certify_expected
)
app.command(name="closure-bound", help="ρ̂ bound from I^(s+1) ⊆ closure(I^r)")(
    certificates.closure_bound
)
app.command(name="strict-bound", help="Strict ρ̂ bound from I^(s+1) ⊆ J·closure(I^r)")(
    certificates.strict_bound
)
app.command(name="chudnovsky", help="Valuative bounds from I^(s+1) ⊆ J^(rC)·closure(I^r)")(
    certificates.chudnovsky
)

app.add_typer(corpus.app, name="fixtures", help="Fixture corpus")


@app.callback()
def main(
    ctx: typer.Context,
    env_file: Path = typer.Option(None, "--env-file", "-e"),
    base_dir: Path = typer.Option(None),
    search_cap: int = typer.Option(None, "--search-cap", min=2),
    rees_cap: int = typer.Option(None, "--rees-cap", min=1),
    rees_window: int = typer.Option(None, "--rees-window", min=1),
    mode: SymbolicMode = typer.Option(None, "--mode", help="How symbolic powers are formed"),
    threads: int = typer.Option(None, "--threads", min=1),
    generator_cap: int = typer.Option(None, "--generator-cap", min=1),
):
    ctx.ensure_object(dict)
    ctx.obj["config"] = Config.load(
        env_file=env_file,
        base_dir=base_dir,
        search_cap=search_cap,
        rees_cap=rees_cap,
        rees_window=rees_window,
        generator_cap=generator_cap,
        threads=threads,
        mode=mode.value if mode else None,
    )


@app.command()
def debug(ctx: typer.Context):
    typer.echo(json.dumps(get_config(ctx).as_debug_dict(), indent=2))
