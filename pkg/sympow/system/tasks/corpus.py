from __future__ import annotations

from enum import Enum
from pathlib import Path
from typing import Optional

import networkx as nx
import typer

from sympow.document import IdealDocument, serialize
from sympow.errors import SympowError
from sympow.monomial.graphs import cover_ideal, edge_ideal
from sympow.system.config import get_config, logger

app = typer.Typer(help="Inspect the fixture corpus and generate graph ideals")


class GraphFamily(str, Enum):
    COMPLETE = "complete"
    CYCLE = "cycle"
    PATH = "path"


class GraphIdeal(str, Enum):
    EDGE = "edge"
    COVER = "cover"


def _graph(family: GraphFamily, n: int) -> nx.Graph:
    if family is GraphFamily.COMPLETE:
        return nx.complete_graph(n)
    if family is GraphFamily.CYCLE:
        return nx.cycle_graph(n)
    return nx.path_graph(n)


@app.command(name="list", help="List the fixture ideals")
def list_fixtures(ctx: typer.Context):
    settings = get_config(ctx)

    if not settings.fixtures_dir.is_dir():
        logger.error(f"Fixture directory not found: {settings.fixtures_dir}")
        raise typer.Exit(code=1)

    for path in sorted(settings.fixtures_dir.glob("*.json")):
        try:
            doc = settings.load_document(path)
        except SympowError as e:
            logger.warning(f"Skipping {path.name}: {e}")
            continue
        I = doc.ideal()
        typer.echo(
            f"{path.stem}\t{len(doc.vars)} vars\t{len(I)} gens\t{doc.description or ''}".rstrip()
        )


@app.command(name="graph", help="Write the edge or cover ideal of a graph as an ideal document")
def graph_fixture(
    family: GraphFamily = typer.Argument(..., help="Graph family"),
    n: int = typer.Argument(..., min=2, help="Number of vertices"),
    kind: GraphIdeal = typer.Option(GraphIdeal.COVER, "--kind", "-k"),
    out: Optional[Path] = typer.Option(None, "--out", "-o"),
):
    graph = _graph(family, n)
    I = edge_ideal(graph) if kind is GraphIdeal.EDGE else cover_ideal(graph)
    doc = IdealDocument(
        vars=list(I.ring.variables),
        gens=list(I.generators),
        name=f"{family.value}{n}-{kind.value}",
        description=f"{kind.value} ideal of the {family.value} graph on {n} vertices",
    )
    text = serialize(doc)

    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {doc.name} to {out}")
