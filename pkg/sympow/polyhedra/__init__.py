from sympow.polyhedra.lp import Constraint, LinearProgram, LPSolution, Sense, lp_minimize
from sympow.polyhedra.newton import Halfspace, NewtonPolyhedron, newton_polyhedron, rees_valuations

__all__ = [
    "Constraint",
    "Halfspace",
    "LPSolution",
    "LinearProgram",
    "NewtonPolyhedron",
    "Sense",
    "lp_minimize",
    "newton_polyhedron",
    "rees_valuations",
]
