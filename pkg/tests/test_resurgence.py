from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from sympow.closure.engine import in_closure
from sympow.errors import HypothesisFailedError, UnsupportedValuationError
from sympow.monomial.graphs import edge_ideal, pairs_ideal
from sympow.monomial.ideal import monomial_in_power, unit_ideal
from sympow.resurgence.engine import ResurgenceEngine
from sympow.resurgence.types import (
    NON_RADICAL_CAVEAT,
    AsymptoticResurgence,
    ResurgenceResult,
    ResurgenceStatus,
)
from sympow.symbolic.engine import SymbolicMode, scheme_for, symbolic_membership
from tests.conftest import load_fixture, xyz
from tests.strategies import graphs, monomial_ideals


class TestAsymptoticResurgence:
    def test_triangle(self, engine, triangle):
        result = engine.asymptotic_resurgence(triangle)
        assert result.exact
        assert result.value == Fraction(4, 3)
        embedded = [p for p in result.profiles if not p.center_is_minimal]
        assert [(p.nu_I, p.nu_hat) for p in embedded] == [(2, Fraction(3, 2))]

    def test_fano(self, engine, fixture_ideal):
        assert engine.asymptotic_resurgence(fixture_ideal("fano")).value == Fraction(9, 7)

    def test_three_triangles(self, engine, fixture_ideal):
        assert engine.asymptotic_resurgence(fixture_ideal("three_triangles")).value == Fraction(4, 3)

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_pairs(self, engine, n):
        assert engine.asymptotic_resurgence(pairs_ideal(n)).value == Fraction(2 * n - 2, n)

    def test_complete_intersection(self, engine):
        assert engine.asymptotic_resurgence(xyz((1, 0, 0), (0, 1, 0))).value == 1

    def test_unit_ideal_has_no_valuation(self, engine):
        with pytest.raises(UnsupportedValuationError):
            engine.asymptotic_resurgence(unit_ideal(xyz((1, 0, 0)).ring))

    def test_generating_degree_formula(self, engine, triangle):
        assert engine.rho_hat_from_generating_degree(triangle, 2) == Fraction(4, 3)

    def test_cached_value_follows_the_scheme(self, engine, mixed_ideal):
        bounded = engine.asymptotic_resurgence(mixed_ideal, scheme_for(mixed_ideal))
        assert not bounded.exact
        exact = engine.asymptotic_resurgence(
            mixed_ideal, scheme_for(mixed_ideal, generating_degree=2)
        )
        assert exact.exact
        assert exact.value == Fraction(6, 5)

    @given(monomial_ideals(max_vars=4, squarefree=True))
    @settings(max_examples=30, deadline=None)
    def test_bounded_by_height_less_a_step(self, I):
        engine = ResurgenceEngine(search_cap=4, rees_window=1)
        h = engine.big_height(scheme_for(I))
        assume(h >= 2)
        assert engine.asymptotic_resurgence(I).upper <= h - Fraction(1, I.ngens)


class TestContainment:
    @pytest.mark.parametrize(
        "s, r, contained",
        [(1, 1, True), (2, 2, False), (3, 2, True), (3, 3, False), (4, 3, True), (5, 4, True)],
    )
    def test_triangle_rule(self, engine, triangle, s, r, contained):
        # I^(s) ⊆ I^r exactly when s >= r and 3s >= 4r - 1
        check = engine.symbolic_containment(triangle, s, r)
        assert check.holds == contained
        if not contained:
            assert symbolic_membership(check.witness, triangle, s)
            assert not monomial_in_power(check.witness, triangle, r)

    @pytest.mark.parametrize("r", range(1, 10))
    def test_triangle_rule_over_a_grid(self, engine, triangle, r):
        for s in range(1, 13):
            assert engine.symbolic_containment(triangle, s, r).holds == (3 * s >= 4 * r - 1), (s, r)

    def test_uniform_containment_in_height(self, engine, fixture_ideal):
        I = fixture_ideal("q6")
        assert engine.symbolic_containment(I, 6, 2).holds

    @given(monomial_ideals(max_vars=4, max_gens=5, squarefree=True), st.integers(1, 3))
    @settings(max_examples=30, deadline=None)
    def test_uniform_containment(self, I, r):
        engine = ResurgenceEngine(search_cap=4, rees_window=1)
        h = engine.big_height(scheme_for(I))
        assert engine.symbolic_containment(I, h * r, r).holds

    @given(monomial_ideals(max_vars=4, squarefree=True))
    @settings(max_examples=20, deadline=None)
    def test_containment_from_the_number_of_variables(self, I):
        engine = ResurgenceEngine(search_cap=4, rees_window=1)
        h = engine.big_height(scheme_for(I))
        assume(h >= 2)
        for r in (I.ngens, I.ngens + 1):
            assert engine.symbolic_containment(I, r * h - h, r).holds

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_pairs_contain_from_n_on(self, engine, n):
        I = pairs_ideal(n)
        for r in range(2, n):
            assert not engine.symbolic_containment(I, 2 * r - 2, r).holds
        assert engine.symbolic_containment(I, 2 * n - 2, n).holds

    def test_lambda_values(self, engine, triangle):
        scheme = scheme_for(triangle)
        assert engine.lambdas(triangle, [1, 3, 4, 6], scheme) == {1: 0, 3: 3, 4: 4, 6: 7}

    def test_threads_do_not_change_results(self, triangle):
        single = ResurgenceEngine(threads=1).lambdas(triangle, [2, 3, 4], scheme_for(triangle))
        pooled = ResurgenceEngine(threads=3).lambdas(triangle, [2, 3, 4], scheme_for(triangle))
        assert single == pooled


class TestResurgence:
    def test_normal_ideal_needs_no_search(self, engine, triangle):
        result = engine.resurgence(triangle)
        assert result.b == 0
        assert result.status is ResurgenceStatus.EXACT
        assert result.rho == Fraction(4, 3)
        assert result.witness is None

    def test_fano(self, engine, fixture_ideal):
        result = engine.resurgence(fixture_ideal("fano"))
        assert result.rho_hat.value == Fraction(9, 7)
        assert result.b == 1
        assert result.witness == (3, 2)
        assert result.N == 6
        assert [(c.s, c.r, c.contained) for c in result.candidates] == [(5, 3, True)]
        assert result.rho == Fraction(3, 2)
        assert result.maximizing_pairs == [(3, 2)]

    @pytest.mark.slow
    def test_three_triangles(self, fixture_ideal):
        # closure(I^3) is the first power that is not regenerated, so the
        # default window of one degree would stop too early
        engine = ResurgenceEngine(search_cap=4, rees_window=2)
        result = engine.resurgence(fixture_ideal("three_triangles"))
        assert result.rho_hat.value == Fraction(4, 3)
        assert result.witness == (6, 4)
        assert result.rho == Fraction(3, 2)

    @pytest.mark.slow
    def test_ten_triples(self, engine, fixture_ideal):
        result = engine.resurgence(fixture_ideal("ten_triples"))
        assert result.rho_hat.value == Fraction(6, 5)
        assert result.witness == (4, 3)
        assert result.N == 9
        assert [(c.s, c.r, c.contained) for c in result.candidates] == [
            (3, 2, True),
            (7, 5, True),
        ]
        assert result.rho == Fraction(4, 3)

    @pytest.mark.slow
    def test_ten_quadruples(self, engine, fixture_ideal):
        result = engine.resurgence(fixture_ideal("ten_quadruples"))
        assert result.rho_hat.value == Fraction(6, 5)
        assert result.witness == (3, 2)
        assert result.N == 4
        assert result.candidates == []
        assert result.rho == Fraction(3, 2)

    def test_strict_symbolic_powers_give_an_interval(self, fixture_ideal):
        engine = ResurgenceEngine(search_cap=3, rees_window=1)
        result = engine.resurgence(fixture_ideal("q6"))
        assert result.h == 3
        assert result.rho_hat.value == 1
        assert result.status is ResurgenceStatus.INTERVAL
        assert result.witness is None
        assert result.lambdas == {1: 0, 2: 2, 3: 3}
        assert result.lower == 1
        assert result.upper == 1 + Fraction(result.b, 4)
        assert result.maximizing_pairs[0] == (2, 2)

    def test_box(self, engine):
        N, pairs = engine.box((3, 2), Fraction(9, 7), 1)
        assert N == 6
        assert pairs == [(5, 3)]

    def _bracket(self, engine, I, rho_hat, b, h, search_cap, lambdas, monkeypatch):
        monkeypatch.setattr(engine, "_witness_search", lambda *args: None)
        monkeypatch.setattr(engine, "lambdas", lambda *args: lambdas)
        result = ResurgenceResult(
            rho_hat=rho_hat,
            lower=rho_hat.lower,
            upper=Fraction(h),
            status=ResurgenceStatus.INTERVAL,
            b=b,
            h=h,
        )
        engine._search(I, scheme_for(I), search_cap, result, {})
        return result

    def test_bracket_never_exceeds_big_height(self, engine, triangle, monkeypatch):
        rho_hat = AsymptoticResurgence(Fraction(19, 10), Fraction(19, 10), True, ())
        result = self._bracket(engine, triangle, rho_hat, 2, 2, 20, {1: 0, 2: 3}, monkeypatch)
        assert result.upper == 2
        assert result.lower == Fraction(19, 10)
        assert result.status is ResurgenceStatus.INTERVAL

    def test_bracket_uses_the_upper_end_of_rho_hat(self, engine, triangle, monkeypatch):
        rho_hat = AsymptoticResurgence(Fraction(1), Fraction(3, 2), False, ())
        result = self._bracket(
            engine, triangle, rho_hat, 1, 3, 3, {1: 0, 2: 2, 3: 3}, monkeypatch
        )
        # (1 + 1/4)·3/2
        assert result.upper == Fraction(15, 8)
        assert result.lower == 1


class TestBounds:
    def test_gamma_of_triangle(self, engine, triangle):
        bound = engine.gamma_bound(triangle, 2, predict_upto=5)
        assert bound.gammas == {1: 1, 2: 1}
        assert bound.table.gamma == {1: 1, 2: 1}
        assert bound.v == Fraction(1, 2)
        assert bound.bound == 2
        assert bound.predicted == {1: 1, 2: 1, 3: 2, 4: 2, 5: 3}

    def test_gamma_of_complete_intersection(self, engine):
        bound = engine.gamma_bound(xyz((1, 0, 0), (0, 1, 0)), 3)
        assert bound.gammas == {1: 1, 2: 2, 3: 3}
        assert all(g <= i for i, g in bound.table.gamma.items())
        assert bound.table.lambda_ == {}
        assert bound.bound == 1

    def test_closure_containment_bound(self, engine):
        certificate = engine.rho_hat_from_containment(pairs_ideal(4), 5, 4)
        assert certificate.value == Fraction(7, 4)
        assert not certificate.strict

    def test_failed_hypothesis_carries_a_witness(self, engine, triangle):
        with pytest.raises(HypothesisFailedError) as e:
            engine.rho_hat_from_containment(triangle, 1, 2)
        assert e.value.witness == (1, 1, 1)

    @pytest.mark.parametrize("n", [3, 4])
    def test_expected_resurgence(self, engine, n):
        found = engine.expected_resurgence_certificate(pairs_ideal(n), n + 1)
        assert found.r == n
        assert found.h == 2

    def test_strict_bound(self, engine, triangle):
        certificate = engine.strict_bound(triangle, 3, 2)
        assert certificate.kind == "strict"
        assert certificate.strict
        assert certificate.value == Fraction(5, 2)
        assert certificate.center_ideal == xyz((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_strict_bound_with_minimal_centers(self, engine):
        certificate = engine.strict_bound(xyz((1, 0, 0), (0, 1, 0)), 1, 1)
        assert certificate.kind == "minimal-centers"
        assert certificate.value == 1

    def test_chudnovsky(self, engine, triangle):
        report = engine.chudnovsky_type_bound(triangle, 3, 2, 1)
        assert report.consistent
        rows = {row.weight: row for row in report.rows}
        assert rows[(1, 1, 1)].implied == Fraction(6, 5)
        assert rows[(1, 1, 1)].nu_hat == Fraction(3, 2)
        assert rows[(1, 1, 0)].nu_J == 0

    def test_lambda_brackets(self, engine, triangle):
        brackets = engine.lambda_brackets(triangle, [2, 3])
        assert brackets.table.lambda_ == {2: 2, 3: 3}
        assert brackets.envelope == (Fraction(1), Fraction(5, 3))
        assert brackets.contains_rho_hat

    def test_lambda_brackets_need_values(self, engine, triangle):
        with pytest.raises(ValueError):
            engine.lambda_brackets(triangle, [])


class TestNonRadical:
    def test_caveat(self, engine, mixed_ideal):
        assert engine.caveats(mixed_ideal) == [NON_RADICAL_CAVEAT]

    def test_envelope_membership(self, engine, mixed_ideal, mixed_components):
        checks = engine.containment_profile(mixed_ideal, mixed_components, range(1, 8))
        first = {p.r: p for p in checks if p.component == 0}
        assert first[2].monomial == (4, 3, 0)
        assert [r for r in range(1, 8) if first[r].in_envelope] == [1, 4, 5, 6, 7]
        assert [r for r in range(2, 8) if first[r].in_power] == [7]

    def test_components_scheme(self, engine, mixed_ideal, mixed_components):
        scheme = scheme_for(mixed_ideal, SymbolicMode.COMPONENTS, components=mixed_components)
        assert engine.big_height(scheme) == 2
        assert engine.symbolic_containment(mixed_ideal, 4, 2, scheme).holds

    def test_single_symbolic_generator_outside_the_cube(self, engine, mixed_ideal):
        J = engine.symbolic.symbolic_power(mixed_ideal, 4)
        outside = [g for g in J.generators if not monomial_in_power(g, mixed_ideal, 3)]
        assert outside == [(9, 6, 2)]
        assert monomial_in_power((18, 12, 4), mixed_ideal, 6)
        assert in_closure((9, 6, 2), mixed_ideal, 3)

    def test_sixth_symbolic_power_inside_fourth_power(self, engine, mixed_ideal):
        assert engine.symbolic_containment(mixed_ideal, 6, 4).holds

    def test_pi_power_enters_at_seven(self, mixed_ideal):
        inside = [
            r for r in range(2, 8) if monomial_in_power((4 * r - 4, 3 * r - 3, 0), mixed_ideal, r)
        ]
        assert inside == [7]


class TestEdgeIdeals:
    def test_five_cycle(self, engine):
        I = edge_ideal(nx.cycle_graph(5))
        assert engine.expected_resurgence_certificate(I, 5) is not None
        assert engine.asymptotic_resurgence(I).upper < 2

    @pytest.mark.slow
    @given(graphs(max_nodes=5))
    @settings(max_examples=20, deadline=None)
    def test_resurgence_below_two(self, graph):
        engine = ResurgenceEngine(search_cap=4, rees_window=1)
        I = edge_ideal(graph)
        assume(engine.big_height(scheme_for(I)) >= 2)
        assert engine.asymptotic_resurgence(I).upper < 2
        assert engine.expected_resurgence_certificate(I, I.ngens) is not None
