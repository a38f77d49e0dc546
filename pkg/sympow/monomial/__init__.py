from sympow.monomial.types import (
    Containment,
    DecompositionReport,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    Ring,
)

__all__ = [
    "Containment",
    "DecompositionReport",
    "Monomial",
    "MonomialIdeal",
    "PrimeSupport",
    "Ring",
]
