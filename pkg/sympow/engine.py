from __future__ import annotations

import logging
from typing import Any, Callable, List, Optional, Sequence

from sympow.logger import get_logger
from sympow.monomial.workspace import Workspace
from sympow.parallel import run_ordered

INDENT = "\t"


class Engine:
    name = "engine"

    def __init__(
        self,
        workspace: Optional[Workspace] = None,
        logger: Optional[logging.Logger] = None,
        threads: int = 1,
        logger_base_indent: int = 0,
    ):
        self.workspace = workspace or Workspace()
        self.logger = logger or get_logger(f"sympow.{self.name}")
        self.threads = threads
        self.logger_base_indent = logger_base_indent

    @property
    def generator_cap(self) -> int:
        return self.workspace.generator_cap

    def info(self, message: str, level: int = 1, **kwargs):
        self.logger.info(f"{INDENT * (level + self.logger_base_indent)}{message}", **kwargs)

    def debug(self, message: str, level: int = 1, **kwargs):
        self.logger.debug(f"{INDENT * (level + self.logger_base_indent)}{message}", **kwargs)

    def error(self, message: str, level: int = 1, **kwargs):
        self.logger.error(f"{INDENT * (level + self.logger_base_indent)}{message}", **kwargs)

    def parallel(self, tasks: Sequence[Callable[[], Any]]) -> List[Any]:
        return run_ordered(tasks, self.threads)
