from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympow.closure.engine import closure_power
from sympow.errors import InfeasibleProgramError, ResourceCapError, UnboundedProgramError
from sympow.monomial.ideal import is_subideal, normalize, power
from sympow.monomial.types import Ring
from sympow.polyhedra.lattice import minimal_lattice_points, minimize_over_lattice
from sympow.polyhedra.lp import Constraint, LinearProgram, Sense, lp_minimize, verify_dual
from sympow.polyhedra.newton import newton_polyhedron, rank, rees_valuations
from tests.strategies import monomial_ideals


class TestSimplex:
    def test_two_constraints(self):
        lp = LinearProgram.of([1, 1], [Constraint.of([1, 2], 2), Constraint.of([3, 1], 3)])
        solution = lp_minimize(lp)
        assert solution.value == Fraction(7, 5)
        assert solution.argmin == (Fraction(4, 5), Fraction(3, 5))
        assert verify_dual(lp, solution)

    def test_equality(self):
        lp = LinearProgram.of([1, 1], [Constraint.of([1, 2], 1, Sense.EQ)])
        assert lp_minimize(lp).value == Fraction(1, 2)

    def test_negative_bound_flips_row(self):
        # -x <= -2  is  x >= 2
        lp = LinearProgram.of([1], [Constraint.of([-1], -2, Sense.LE)])
        solution = lp_minimize(lp)
        assert solution.value == 2
        assert verify_dual(lp, solution)

    def test_infeasible(self):
        lp = LinearProgram.of([1], [Constraint.of([1], 1), Constraint.of([1], 0, Sense.LE)])
        with pytest.raises(InfeasibleProgramError):
            lp_minimize(lp)

    def test_unbounded(self):
        lp = LinearProgram.of([-1, 0], [Constraint.of([0, 1], 1)])
        with pytest.raises(UnboundedProgramError):
            lp_minimize(lp)

    @given(
        st.integers(1, 4).flatmap(
            lambda n: st.tuples(
                st.lists(st.integers(0, 5), min_size=n, max_size=n),
                st.lists(
                    st.tuples(
                        st.lists(st.integers(0, 3), min_size=n, max_size=n).filter(any),
                        st.integers(1, 6),
                    ),
                    min_size=1,
                    max_size=4,
                ),
            )
        )
    )
    @settings(max_examples=60, deadline=None)
    def test_covering_programs_carry_a_dual_certificate(self, data):
        objective, rows = data
        lp = LinearProgram.of(objective, [Constraint.of(a, b) for a, b in rows])
        assert verify_dual(lp, lp_minimize(lp))


class TestNewton:
    def test_triangle_facets(self, triangle):
        facets = rees_valuations(triangle)
        assert [(h.normal, h.offset) for h in facets] == [
            ((0, 1, 1), 1),
            ((1, 0, 1), 1),
            ((1, 1, 0), 1),
            ((1, 1, 1), 2),
        ]
        assert facets[-1].render(triangle.ring) == "x + y + z >= 2"

    def test_interior_generator_is_not_a_vertex(self):
        I = normalize([(2, 0), (1, 1), (0, 2)], Ring(("x", "y")))
        polyhedron = newton_polyhedron(I)
        assert polyhedron.vertices == ((0, 2), (2, 0))
        assert [(h.normal, h.offset) for h in polyhedron.facets] == [((1, 1), 2)]

    def test_rank(self):
        assert rank([[1, 2], [2, 4]]) == 1
        assert rank([[1, 0, 1], [0, 1, 1], [1, 1, 2]]) == 2
        assert rank([]) == 0

    @given(monomial_ideals())
    @settings(max_examples=60, deadline=None)
    def test_generators_satisfy_every_facet(self, I):
        if I.is_unit:
            return
        polyhedron = newton_polyhedron(I)
        for g in I:
            assert polyhedron.contains(g)
        assert all(h.offset > 0 for h in polyhedron.facets)


class TestLattice:
    def test_minimal_points_of_a_simplex(self):
        assert minimal_lattice_points([[1, 1]], [2], [2, 2]) == [(0, 2), (1, 1), (2, 0)]

    def test_minimize(self):
        value, point = minimize_over_lattice([[1, 1], [1, 0]], [2, 1], [2, 2], [1, 2])
        assert (value, point) == (2, (2, 0))

    def test_cap(self):
        with pytest.raises(ResourceCapError):
            minimal_lattice_points([[1, 1, 1]], [6], [6, 6, 6], cap=3)

    def test_unsatisfiable_zero_row(self):
        assert minimal_lattice_points([[0, 0]], [1], [3, 3]) == []


class TestIntegralClosure:
    def test_two_squares(self):
        I = normalize([(2, 0), (0, 2)], Ring(("x", "y")))
        assert closure_power(I, 1).generators == ((0, 2), (1, 1), (2, 0))

    @given(monomial_ideals(), st.integers(1, 2))
    @settings(max_examples=40, deadline=None)
    def test_closure_is_minimal_and_contains_the_power(self, I, r):
        if I.is_unit:
            return
        J = closure_power(I, r)
        assert is_subideal(power(I, r), J).holds
        polyhedron = newton_polyhedron(I)
        for g in J:
            assert polyhedron.contains(g, r)
            for i, e in enumerate(g):
                if e:
                    smaller = g[:i] + (e - 1,) + g[i + 1 :]
                    assert not polyhedron.contains(smaller, r)
