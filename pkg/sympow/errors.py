from __future__ import annotations

from typing import Any, Optional, Sequence


class SympowError(Exception):
    pass


class AmbientMismatchError(SympowError):
    def __init__(
        self, message: str, expected: Optional[int] = None, actual: Optional[int] = None
    ) -> None:
        super().__init__(message)
        self.expected = expected
        self.actual = actual


class ZeroIdealError(SympowError):
    pass


class ResourceCapError(SympowError):
    def __init__(
        self, message: str, cap: int, observed: int, resource: str = "generators"
    ) -> None:
        super().__init__(message)
        self.cap = cap
        self.observed = observed
        self.resource = resource


class InfeasibleProgramError(SympowError):
    def __init__(self, message: str, phase_one_value: Any = None) -> None:
        super().__init__(message)
        self.phase_one_value = phase_one_value


class UnboundedProgramError(SympowError):
    def __init__(self, message: str, direction: Optional[int] = None) -> None:
        super().__init__(message)
        self.direction = direction


class UnsupportedValuationError(SympowError):
    def __init__(self, message: str, weight: Optional[Sequence[int]] = None) -> None:
        super().__init__(message)
        self.weight = tuple(weight) if weight is not None else None


class ModeMismatchError(SympowError):
    def __init__(
        self, message: str, mode: Optional[str] = None, missing: Sequence[Any] = ()
    ) -> None:
        super().__init__(message)
        self.mode = mode
        self.missing = list(missing)


class HypothesisFailedError(SympowError):
    def __init__(
        self,
        message: str,
        witness: Optional[tuple[int, ...]] = None,
        hypothesis: Optional[str] = None,
    ) -> None:
        super().__init__(message)
        self.witness = witness
        self.hypothesis = hypothesis


class IdealParseError(SympowError):
    def __init__(self, message: str, line: int = 0, column: int = 0) -> None:
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
