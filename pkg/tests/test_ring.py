import pytest

from core.graph import broadcast_cost
from game.costs import social_cost
from game.equilibrium import is_equilibrium
from game.model import Verdict
from instances.ring import ring_family, ring_family_costs, ring_size


@pytest.mark.parametrize("k,h,lam,lam_bar,lam_prime", [
    (2, 1, 4, 4, 5),
    (3, 1, 9, 9, 11),
    (3, 2, 15, 14, 19),
    (4, 2, 26, 24, 31),
])
def test_known_costs(k, h, lam, lam_bar, lam_prime):
    costs = ring_family_costs(k, h)
    assert (costs.lam, costs.lam_bar, costs.lam_prime) == (lam, lam_bar, lam_prime)
    assert costs.n_k == ring_size(k, h)


def test_recurrences_match_bfs():
    for k in range(2, 7):
        for h in range(1, 5):
            costs = ring_family_costs(k, h)
            graph = ring_family(k, h).graph
            assert graph.n == (h + 1) * k
            for hub in range(k):
                assert broadcast_cost(graph, hub) == costs.lam_bar
            for middle in range(k, graph.n):
                assert broadcast_cost(graph, middle) == costs.lam


def test_social_cost_and_window():
    instance = ring_family(3, 2)
    assert instance.spec.bound(0) == 15
    assert social_cost(instance.spec, instance.profile) == 12
    assert instance.expected.stable is True
    assert ring_family(3, 2, bound=19).expected.stable is None


def test_rejects_bad_parameters():
    with pytest.raises(ValueError):
        ring_family_costs(1, 2)
    with pytest.raises(ValueError):
        ring_family_costs(3, 0)


def test_four_cycle_window():
    assert is_equilibrium(*_game(ring_family(2, 1, bound=4))).verdict is Verdict.STABLE
    result = is_equilibrium(*_game(ring_family(2, 1, bound=5)))
    assert result.verdict is Verdict.UNSTABLE
    assert result.witness.best_cost == 1


def test_ratio_approaches_two():
    instance = ring_family(2, 50)
    sc = social_cost(instance.spec, instance.profile)
    assert sc == 200
    assert sc / (instance.n - 1) == pytest.approx(200 / 101)


@pytest.mark.slow
def test_stability_window():
    for k in range(2, 7):
        for h in range(1, 5):
            costs = ring_family_costs(k, h)
            for bound in (costs.lam, costs.lam_prime - 1):
                assert is_equilibrium(*_game(ring_family(k, h, bound))).verdict is Verdict.STABLE, (k, h, bound)
            if h == 1:
                # On the plain cycle one edge to the middle of the remaining path reaches lambda'.
                assert is_equilibrium(*_game(ring_family(k, h, costs.lam_prime))).verdict is Verdict.UNSTABLE


def _game(instance):
    return instance.spec, instance.profile
