from pathlib import Path

import pytest

from sympow.document import parse_ideal
from sympow.monomial.ideal import normalize
from sympow.monomial.types import MonomialIdeal, Ring
from sympow.monomial.workspace import Workspace
from sympow.resurgence.engine import ResurgenceEngine

FIXTURES_DIR = Path(__file__).parent.parent / "src" / "fixtures"


def load_fixture(name: str) -> MonomialIdeal:
    return parse_ideal(FIXTURES_DIR / f"{name}.json").ideal()


def xyz(*gens) -> MonomialIdeal:
    """Ideal in k[x, y, z] from exponent triples."""
    return normalize(gens, Ring(("x", "y", "z")))


@pytest.fixture
def fixture_ideal():
    return load_fixture


@pytest.fixture
def triangle() -> MonomialIdeal:
    return xyz((1, 1, 0), (1, 0, 1), (0, 1, 1))


@pytest.fixture
def mixed_ideal() -> MonomialIdeal:
    return xyz((4, 2, 0), (3, 3, 0), (4, 0, 1), (0, 3, 2))


@pytest.fixture
def mixed_components() -> list[MonomialIdeal]:
    return [
        xyz((4, 0, 0), (0, 3, 0)),
        xyz((3, 0, 0), (0, 0, 2)),
        xyz((0, 2, 0), (0, 0, 1)),
    ]


@pytest.fixture
def workspace() -> Workspace:
    return Workspace()


@pytest.fixture
def engine(workspace) -> ResurgenceEngine:
    return ResurgenceEngine(workspace=workspace, search_cap=4, rees_window=1)
