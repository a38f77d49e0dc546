from sympow.closure.engine import (
    ClosureEngine,
    ClosureProfile,
    closure_contains,
    closure_power,
    in_closure,
)

__all__ = ["ClosureEngine", "ClosureProfile", "closure_contains", "closure_power", "in_closure"]
