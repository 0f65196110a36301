import itertools
import math

import pytest
from hypothesis import given, strategies as st

from netforge import _tables
from netforge.errors import InvalidInputError
from netforge.graph import StrategyProfile, UndirectedGraph, induced_graph
from netforge.model import (
    INFINITE,
    CostVector,
    OwnedGraph,
    lower_bound_case2,
    lower_bound_case2_raw,
    lower_bound_global,
    player_cost,
    social_cost_owned,
    social_cost_profile,
)
from oracles import all_graphs, all_profiles, nx_player_cost, owned_cost

ALPHA_GRID = [0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 5.0]


class TestPlayerCost:
    def test_single_edge(self):
        p = StrategyProfile.from_lists([[1], []])
        c = CostVector.of([0.5, 0.5])
        assert player_cost(p, c, 0) == pytest.approx(1.5)
        assert player_cost(p, c, 1) == pytest.approx(1.0)

    def test_star_leaf(self):
        p = StrategyProfile.from_lists([[], [0], [0]])
        assert player_cost(p, CostVector.of([2, 2, 2]), 1) == pytest.approx(5.0)
        assert nx_player_cost([[], [0], [0]], [2, 2, 2], 1) == 5

    def test_disconnected_is_infinite(self):
        p = StrategyProfile.from_lists([[], []])
        assert player_cost(p, CostVector.of([1, 1]), 0) == INFINITE

    def test_dimension_mismatch(self):
        with pytest.raises(InvalidInputError):
            player_cost(StrategyProfile.from_lists([[], []]), CostVector.of([1, 1, 1]), 0)


class TestSocialCost:
    def test_complete(self):
        p = StrategyProfile.from_lists([[1, 2], [2], []])
        assert social_cost_profile(p, CostVector.of([0.5] * 3)) == pytest.approx(7.5)

    def test_single_player(self):
        assert social_cost_profile(StrategyProfile.empty(1), CostVector.of([4])) == 0

    def test_disconnected(self):
        p = StrategyProfile.from_lists([[1], [], []])
        assert social_cost_profile(p, CostVector.of([1, 1, 1])) == INFINITE

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_additivity(self, n):
        costs = CostVector.of([0.3 + 0.7 * i for i in range(n)])
        for lists in all_profiles(n):
            p = StrategyProfile.from_lists(lists)
            total = sum(player_cost(p, costs, i) for i in range(n))
            got = social_cost_profile(p, costs)
            assert got == total or got == pytest.approx(total)


class TestOwned:
    def test_star_owned_by_center(self):
        g = OwnedGraph(3, frozenset({(0, 1), (0, 2)}))
        assert social_cost_owned(g, CostVector.of([3, 3, 3])) == pytest.approx(14)

    @pytest.mark.parametrize("owned", [
        {(0, 1), (1, 2), (2, 0)},
        {(1, 0), (2, 1), (0, 2)},
        {(0, 1), (0, 2), (1, 2)},
    ])
    def test_triangle_any_ownership(self, owned):
        g = OwnedGraph(3, frozenset(owned))
        assert social_cost_owned(g, CostVector.of([1, 1, 1])) == pytest.approx(9)

    def test_two_nodes(self):
        g = OwnedGraph(2, frozenset({(0, 1)}))
        assert social_cost_owned(g, CostVector.of([5, 1])) == pytest.approx(7)

    def test_two_owners_rejected(self):
        with pytest.raises(InvalidInputError):
            OwnedGraph(2, frozenset({(0, 1), (1, 0)}))

    def test_cheapest_owner_ties_to_lower_index(self):
        g = OwnedGraph.cheapest_owner(UndirectedGraph.complete(3), CostVector.of([2, 1, 1]))
        assert g.owned_edges == {(1, 0), (2, 0), (1, 2)}

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_matches_networkx(self, n):
        alphas = [0.5 + i for i in range(n)]
        costs = CostVector.of(alphas)
        for edges in all_graphs(n):
            g = OwnedGraph.cheapest_owner_edges(n, edges, costs)
            want = owned_cost(n, sorted(g.owned_edges), alphas)
            got = social_cost_owned(g, costs)
            assert got == want or got == pytest.approx(want)


class TestLowerBounds:
    def test_global(self):
        assert lower_bound_global(3, 3, 2) == 14
        assert lower_bound_global(2, 2, 1) == 4
        assert lower_bound_global(3, 0, 3) == 6

    def test_global_range(self):
        with pytest.raises(InvalidInputError):
            lower_bound_global(3, 1, 4)

    def test_case2(self):
        assert lower_bound_case2(3, 1, 1.5, 3) == pytest.approx(9.5)
        assert lower_bound_case2(2, 2, 2, 1) == pytest.approx(4)
        assert lower_bound_case2(3, 0, 0, 2) == pytest.approx(8)

    def test_case2_needs_spanning_edge_count(self):
        with pytest.raises(InvalidInputError):
            lower_bound_case2(4, 1, 1, 2)

    @given(
        st.integers(2, 9),
        st.floats(0, 10),
        st.floats(0, 10),
        st.data(),
    )
    def test_case2_forms_agree(self, n, a, b, data):
        a1, a2 = min(a, b), max(a, b)
        m = data.draw(st.integers(n - 1, n * (n - 1) // 2))
        simplified = a1 * (n - 1) + (a2 - 2) * m - (n - 1) * (a2 - 2 * n)
        assert lower_bound_case2(n, a1, a2, m) == pytest.approx(simplified)
        assert lower_bound_case2(n, a1, a2, m) == lower_bound_case2_raw(n, a1, a2, m)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_global_sound_and_tight(self, n):
        for alphas in itertools.product(ALPHA_GRID, repeat=2):
            vec = sorted(alphas) + [alphas[-1] + 1.0] * (n - 2)
            masks, ms, owned = _tables.connected_owned_costs(vec)
            bounds = [lower_bound_global(n, min(vec), int(m)) for m in ms]
            assert all(c >= b - 1e-9 for c, b in zip(owned, bounds))
            if min(vec) >= 2:
                assert any(abs(c - b) <= 1e-9 for c, b in zip(owned, bounds))


@st.composite
def priced_profiles(draw):
    n = draw(st.integers(2, 5))
    lists = [draw(st.sets(st.sampled_from([j for j in range(n) if j != i]))) for i in range(n)]
    alphas = draw(st.lists(st.floats(0, 5), min_size=n, max_size=n))
    return StrategyProfile.from_lists(lists), CostVector.of(alphas)


@given(priced_profiles())
def test_double_billing_dominance(case):
    profile, costs = case
    cheapest = OwnedGraph.cheapest_owner(induced_graph(profile), costs)
    a, b = social_cost_profile(profile, costs), social_cost_owned(cheapest, costs)
    assert a >= b - 1e-9 or (math.isinf(a) and math.isinf(b))


@given(priced_profiles(), st.data())
def test_monotone_in_prices(case, data):
    profile, costs = case
    k = data.draw(st.integers(0, costs.n - 1))
    bump = data.draw(st.floats(0, 3))
    raised = list(costs.alphas)
    raised[k] += bump
    raised = CostVector.of(raised)
    for i in range(costs.n):
        assert player_cost(profile, raised, i) >= player_cost(profile, costs, i)
    assert social_cost_profile(profile, raised) >= social_cost_profile(profile, costs)


class TestCostVector:
    def test_negative_rejected(self):
        with pytest.raises(InvalidInputError):
            CostVector.of([1, -0.1])

    def test_empty_rejected(self):
        with pytest.raises(InvalidInputError):
            CostVector.of([])

    def test_unsorted_accepted_but_flagged(self):
        c = CostVector.of([3, 1])
        assert not c.is_ascending()
        with pytest.raises(InvalidInputError):
            c.require_ascending()
