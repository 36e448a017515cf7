import pytest

from core.cover import min_dominating_set
from core.graph import Graph
from game.best_response import best_response
from instances.reductions import (isolated_player, k_median_cost, min_centers_within, min_k_median,
                                  reduction_from_dominating_set, reduction_from_kmedian)
from tests.conftest import brute_force_domination, connected_atlas_graphs, cycle, path


class TestDominatingSetReduction:

    def test_sizes(self):
        assert reduction_from_dominating_set(cycle(4), 2).n == 5
        assert reduction_from_dominating_set(cycle(4), 3).n == 13

    def test_path_nodes_hang_off_their_vertex(self):
        instance = reduction_from_dominating_set(cycle(4), 3)
        graph = instance.graph
        assert graph.neighbors(4) == (0,)
        assert graph.neighbors(5) == (0,)
        assert graph.degree(isolated_player(instance)) == 0

    @pytest.mark.parametrize("R", [2, 3, 4])
    def test_best_response_is_domination_number(self, R):
        for base in (cycle(4), cycle(7), path(6)):
            instance = reduction_from_dominating_set(base, R)
            br = best_response(instance.spec, instance.profile, isolated_player(instance))
            assert br.cost == len(min_dominating_set(base))

    def test_rejects_disconnected_graph(self):
        with pytest.raises(ValueError):
            reduction_from_dominating_set(Graph.from_edges(3, [(0, 1)]), 2)

    def test_rejects_radius_one(self):
        with pytest.raises(ValueError):
            reduction_from_dominating_set(cycle(4), 1)

    @pytest.mark.slow
    def test_all_small_graphs(self):
        for index, base in enumerate(connected_atlas_graphs(7)):
            expected = brute_force_domination(base)
            for R in (2, 3) if index % 5 == 0 else (2,):
                instance = reduction_from_dominating_set(base, R)
                br = best_response(instance.spec, instance.profile, isolated_player(instance))
                assert br.cost == expected, (base.edges(), R)


class TestKMedianReduction:

    def test_bound(self):
        instance = reduction_from_kmedian(path(4), 4)
        assert instance.n == 5
        assert instance.spec.bound(0) == 8

    def test_zero_beta_needs_every_vertex(self):
        instance = reduction_from_kmedian(cycle(5), 0)
        br = best_response(instance.spec, instance.profile, isolated_player(instance))
        assert br.cost == 5

    def test_rejects_negative_beta(self):
        with pytest.raises(ValueError):
            reduction_from_kmedian(path(3), -1)

    @pytest.mark.slow
    def test_all_small_graphs(self):
        for base in connected_atlas_graphs(7):
            betas = {0, min_k_median(base, 1)}
            if base.n >= 2:
                betas.add(min_k_median(base, 2))
            for beta in betas:
                instance = reduction_from_kmedian(base, beta)
                br = best_response(instance.spec, instance.profile, isolated_player(instance))
                assert br.cost == min_centers_within(base, beta), (base.edges(), beta)


class TestKMedianOracle:

    def test_path_costs(self):
        assert k_median_cost(path(4), [1]) == 4
        assert min_k_median(path(4), 1) == 4
        assert min_k_median(path(4), 2) == 2

    def test_min_centers(self):
        assert min_centers_within(path(4), 4) == 1
        assert min_centers_within(path(4), 3) == 2
        assert min_centers_within(path(4), 0) == 4

    def test_requires_a_center(self):
        with pytest.raises(ValueError):
            k_median_cost(path(3), [])
