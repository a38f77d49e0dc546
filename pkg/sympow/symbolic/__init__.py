from sympow.symbolic.engine import (
    NuHat,
    SymbolicEngine,
    SymbolicMode,
    SymbolicScheme,
    scheme_for,
    symbolic_membership,
)

__all__ = [
    "NuHat",
    "SymbolicEngine",
    "SymbolicMode",
    "SymbolicScheme",
    "scheme_for",
    "symbolic_membership",
]
