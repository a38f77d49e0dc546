from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sympow.errors import ModeMismatchError, UnsupportedValuationError, ZeroIdealError
from sympow.monomial.decomposition import minimal_primes
from sympow.monomial.ideal import (
    contains_monomial,
    ideal_containment,
    ideal_sum,
    intersect_prime_power,
    is_subideal,
    multiply,
    normalize,
    power,
    principal,
    unit_ideal,
    zero_ideal,
)
from sympow.monomial.types import Ring
from sympow.symbolic.engine import (
    SymbolicEngine,
    SymbolicMode,
    nu,
    scheme_for,
    symbolic_membership,
)
from tests.conftest import load_fixture, xyz
from tests.strategies import monomial_ideals, monomials


@pytest.fixture
def symbolic(workspace) -> SymbolicEngine:
    return SymbolicEngine(workspace=workspace)


class TestSchemes:
    def test_default_modes(self, triangle, mixed_ideal):
        assert scheme_for(triangle).mode is SymbolicMode.SQUAREFREE
        assert scheme_for(mixed_ideal).mode is SymbolicMode.ASSOCIATED

    def test_squarefree_mode_needs_squarefree_input(self, mixed_ideal):
        with pytest.raises(ModeMismatchError):
            scheme_for(mixed_ideal, "sqfree")

    def test_components_must_intersect_to_the_ideal(self, mixed_ideal, mixed_components):
        scheme = scheme_for(mixed_ideal, SymbolicMode.COMPONENTS, components=mixed_components)
        assert len(scheme.primes) == 3
        with pytest.raises(ModeMismatchError):
            scheme_for(mixed_ideal, SymbolicMode.COMPONENTS, components=mixed_components[:2])
        with pytest.raises(ModeMismatchError):
            scheme_for(mixed_ideal, SymbolicMode.COMPONENTS)

    def test_components_must_cover_associated_primes(self):
        I = xyz((2, 0, 0), (1, 1, 0))
        with pytest.raises(ModeMismatchError) as e:
            scheme_for(I, SymbolicMode.COMPONENTS, components=[I])
        assert e.value.missing == [["x"]]

    def test_zero_ideal(self):
        with pytest.raises(ZeroIdealError):
            scheme_for(zero_ideal(Ring(("x",))))

    def test_scheme_for_another_ideal(self, symbolic, triangle, mixed_ideal):
        with pytest.raises(ModeMismatchError):
            symbolic.symbolic_power(triangle, 2, scheme_for(mixed_ideal))

    def test_keys_tell_schemes_apart(self):
        # <x^2, xy> = <x> ∩ <x^2, y> = <x> ∩ <x^2, xy, y^2>
        I = normalize([(2, 0), (1, 1)], Ring(("x", "y")))
        x = normalize([(1, 0)], I.ring)
        first = scheme_for(
            I, SymbolicMode.COMPONENTS, components=[x, normalize([(2, 0), (0, 1)], I.ring)]
        )
        second = scheme_for(
            I, SymbolicMode.COMPONENTS, components=[x, normalize([(2, 0), (1, 1), (0, 2)], I.ring)]
        )
        assert first.power_key != second.power_key
        assert first.power_key != scheme_for(I).power_key

        bounded = scheme_for(I, generating_degree=2)
        assert bounded.power_key == scheme_for(I).power_key
        assert bounded.key != scheme_for(I).key


class TestSymbolicPowers:
    def test_triangle_square(self, symbolic, triangle):
        J = symbolic.symbolic_power(triangle, 2)
        assert J.generators == ((0, 2, 2), (1, 1, 1), (2, 0, 2), (2, 2, 0))

    def test_membership(self, triangle, mixed_ideal):
        assert symbolic_membership((1, 1, 1), triangle, 2)
        assert not symbolic_membership((1, 1, 0), triangle, 2)
        with pytest.raises(ModeMismatchError):
            symbolic_membership((4, 2, 0), mixed_ideal, 1)

    def test_complete_intersection_has_no_gap(self, symbolic):
        I = xyz((1, 0, 0), (0, 1, 0))
        for s in range(1, 4):
            assert symbolic.symbolic_power(I, s) == power(I, s)

    def test_components_mode_agrees_with_associated(self, symbolic, mixed_ideal, mixed_components):
        by_components = scheme_for(mixed_ideal, SymbolicMode.COMPONENTS, components=mixed_components)
        assert symbolic.symbolic_power(mixed_ideal, 2, by_components) == symbolic.symbolic_power(mixed_ideal, 2)

    def test_minimal_primes_drop_embedded_components(self, symbolic):
        I = xyz((2, 0, 0), (1, 1, 0))
        assert symbolic.symbolic_power(I, 1) == I
        minimal = scheme_for(I, SymbolicMode.MINIMAL)
        assert symbolic.symbolic_power(I, 1, minimal) == xyz((1, 0, 0))

    def test_contains_without_forming_the_power(self, symbolic, mixed_ideal):
        assert symbolic.contains((4, 2, 0), mixed_ideal, 1)
        assert not symbolic.contains((3, 2, 0), mixed_ideal, 1)

    def test_unit_and_zeroth_power(self, symbolic, triangle):
        assert symbolic.symbolic_power(triangle, 0).is_unit
        assert symbolic.symbolic_power(unit_ideal(triangle.ring), 3).is_unit

    @given(monomial_ideals(max_vars=4, squarefree=True), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_lattice_points_match_prime_power_intersection(self, I, s):
        if I.is_unit:
            return
        expected = unit_ideal(I.ring)
        for P in minimal_primes(I):
            expected = intersect_prime_power(expected, P.variables, s)
        assert SymbolicEngine().symbolic_power(I, s) == expected

    @given(monomial_ideals(), st.integers(1, 3))
    @settings(max_examples=40, deadline=None)
    def test_ordinary_power_inside_symbolic_power(self, I, s):
        if I.is_unit:
            return
        engine = SymbolicEngine()
        current = engine.symbolic_power(I, s)
        assert is_subideal(power(I, s), current).holds
        assert is_subideal(engine.symbolic_power(I, s + 1), current).holds

    @given(monomial_ideals(max_vars=4, squarefree=True), st.integers(1, 3), st.data())
    @settings(max_examples=40, deadline=None)
    def test_membership_matches_generators(self, I, s, data):
        m = data.draw(monomials(I.ngens, max_exponent=4))
        J = SymbolicEngine().symbolic_power(I, s)
        assert symbolic_membership(m, I, s) == contains_monomial(J, m)


class TestStrictSymbolicPowers:
    @pytest.fixture
    def q6(self):
        return load_fixture("q6")

    @pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
    def test_closed_form(self, symbolic, q6, r):
        # I^(r) = I^r + (abcdef)·I^(r-2)
        everything = principal(q6.ring, (1,) * 6)
        expected = ideal_sum(power(q6, r), multiply(everything, power(q6, r - 2)))
        J = symbolic.symbolic_power(q6, r)
        assert J == expected
        assert J != power(q6, r)

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
    def test_next_symbolic_power_is_inside(self, symbolic, q6, r):
        assert ideal_containment(symbolic.symbolic_power(q6, r + 1), q6, r).holds


class TestValuations:
    def test_waldschmidt_of_triangle(self, symbolic, triangle):
        hat = symbolic.waldschmidt(triangle)
        assert hat.value == Fraction(3, 2)
        assert hat.exact
        assert hat.method == "lp"

    def test_minimize(self, symbolic, triangle):
        assert symbolic.minimize(triangle, (1, 1, 1), 2) == (3, (1, 1, 1))

    def test_vanishing_weight(self, symbolic, triangle):
        with pytest.raises(UnsupportedValuationError):
            symbolic.nu_hat(triangle, (1, 0, 0))

    def test_non_radical_value_is_an_upper_bound(self, symbolic, mixed_ideal):
        hat = symbolic.waldschmidt(mixed_ideal)
        assert not hat.exact
        assert hat.method == "upper-bound"
        assert hat.value <= 5
        assert [s for s, _ in hat.sequence] == list(range(1, symbolic.nu_hat_depth + 1))

    def test_generating_degree_makes_it_exact(self, symbolic, mixed_ideal):
        hat = symbolic.waldschmidt(mixed_ideal, scheme_for(mixed_ideal, generating_degree=2))
        assert hat.exact
        assert hat.method == "generating-degree"
        assert len(hat.sequence) == 2

    @given(monomial_ideals(max_vars=4, squarefree=True))
    @settings(max_examples=30, deadline=None)
    def test_lp_value_is_reached_by_a_symbolic_power(self, I):
        # vertex denominators of a 0/1 system in four variables divide 6
        engine = SymbolicEngine()
        hat = engine.waldschmidt(I)
        ones = (1,) * I.ngens
        for s in range(1, 4):
            assert hat.value <= Fraction(nu(engine.symbolic_power(I, s), ones), s)
        assert hat.value == Fraction(nu(engine.symbolic_power(I, 6), ones), 6)


class TestNoetherianShortcut:
    def test_triangle_square_differs(self, symbolic, triangle):
        (first,) = symbolic.noetherian_power_test(triangle, c_max=1)
        assert not first.equal
        assert first.witness == (1, 1, 1)

    def test_complete_intersection(self, symbolic):
        I = xyz((1, 0, 0), (0, 1, 0))
        assert all(t.equal for t in symbolic.noetherian_power_test(I, c_max=3))

    def test_c_shortcut_holds_for_triangle(self, symbolic, triangle):
        shortcut = symbolic.c_shortcut(triangle, None, 2, 3, weights=[(1, 1, 1)])
        assert shortcut.holds
        assert shortcut.values == {(1, 1, 1): Fraction(3, 2)}

    def test_c_shortcut_failure(self, symbolic, triangle):
        shortcut = symbolic.c_shortcut(triangle, None, 1, 3)
        assert not shortcut.holds
        assert shortcut.failure == (2, (1, 1, 1))

    @pytest.mark.slow
    def test_sixteen_quadrics_never_square(self, symbolic):
        I = load_fixture("sixteen_quadrics")
        tests = symbolic.noetherian_power_test(I, c_max=7)
        assert [t.index for t in tests] == list(range(1, 8))
        for t in tests:
            assert not t.equal
            assert symbolic_membership(t.witness, I, 2 * t.index)
        base = symbolic.symbolic_power(I, 1)
        assert not contains_monomial(multiply(base, base), tests[0].witness)

    def test_bad_c(self, symbolic, triangle):
        with pytest.raises(ValueError):
            symbolic.noetherian_power_test(triangle, c_max=0)
