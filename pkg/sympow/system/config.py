from __future__ import annotations

import os
from dataclasses import asdict, dataclass
from pathlib import Path

import typer
from dotenv import load_dotenv

from sympow.document import IdealDocument, parse_ideal
from sympow.logger import get_logger
from sympow.monomial.ideal import DEFAULT_GENERATOR_CAP
from sympow.monomial.workspace import Workspace
from sympow.resurgence.engine import ResurgenceEngine

logger = get_logger("sympow.system")


def _env_int(name: str) -> int | None:
    value = os.getenv(name)
    if value is None or not value.strip():
        return None
    try:
        return int(value)
    except ValueError:
        logger.warning(f"Ignoring non-integer {name}={value!r}")
        return None


@dataclass
class Config:
    base_dir: Path
    fixtures_dir: Path
    cache_dir: Path | None

    search_cap: int
    rees_cap: int | None
    rees_window: int | None
    generator_cap: int
    threads: int
    mode: str | None

    @classmethod
    def load(
        cls,
        *,
        env_file: Path | None = None,
        base_dir: Path | None = None,
        search_cap: int | None = None,
        rees_cap: int | None = None,
        rees_window: int | None = None,
        generator_cap: int | None = None,
        threads: int | None = None,
        mode: str | None = None,
    ) -> Config:

        if env_file:
            logger.info(f"Loading env file: {env_file}")
            load_dotenv(env_file, override=True)
        else:
            load_dotenv()

        base_dir = base_dir or Path(__file__).parent.parent.parent
        cache_dir = os.getenv("SYMPOW_CACHE_DIR")

        return cls(
            base_dir=base_dir,
            fixtures_dir=base_dir / "src" / "fixtures",
            cache_dir=Path(cache_dir) if cache_dir else None,
            search_cap=search_cap or _env_int("SYMPOW_SEARCH_CAP") or 20,
            rees_cap=rees_cap or _env_int("SYMPOW_REES_CAP"),
            rees_window=rees_window or _env_int("SYMPOW_REES_WINDOW"),
            generator_cap=generator_cap
            or _env_int("SYMPOW_GENERATOR_CAP")
            or DEFAULT_GENERATOR_CAP,
            threads=threads or _env_int("SYMPOW_THREADS") or 1,
            mode=mode or os.getenv("SYMPOW_MODE") or None,
        )

    def resolve_ideal(self, path: Path) -> Path:
        """
        The path itself when it exists, else the fixture of that name.
        """
        if path.is_file():
            return path
        for candidate in (self.fixtures_dir / path, self.fixtures_dir / f"{path}.json"):
            if candidate.is_file():
                return candidate
        logger.error(f"Ideal file not found: {path}")
        raise FileNotFoundError(path)

    def load_document(self, path: Path) -> IdealDocument:
        return parse_ideal(self.resolve_ideal(path))

    def workspace(self) -> Workspace:
        return Workspace(cache_dir=self.cache_dir, generator_cap=self.generator_cap)

    def engine(self) -> ResurgenceEngine:
        return ResurgenceEngine(
            workspace=self.workspace(),
            threads=self.threads,
            search_cap=self.search_cap,
            rees_cap=self.rees_cap,
            rees_window=self.rees_window,
        )

    def as_debug_dict(self) -> dict:
        data = asdict(self)

        for key, value in data.items():
            if isinstance(value, Path):
                data[key] = str(value.resolve())

        return data


def get_config(ctx: typer.Context) -> Config:
    return ctx.obj["config"]
