"""
Shared fixtures and brute-force oracles.
"""

import random
from itertools import combinations
from typing import Iterable, List

import networkx as nx
import pytest

from core.graph import UNBOUNDED, Graph, bfs_levels, closed_neighborhoods
from core.utils import DOMINATION_CACHE
from game.costs import player_cost
from game.model import GameSpec, StrategyProfile, Variant


@pytest.fixture(autouse=True)
def _fresh_domination_cache():
    DOMINATION_CACHE.clear()
    yield
    DOMINATION_CACHE.clear()


# =============================================================================
# GRAPHS
# =============================================================================

def cycle(n: int) -> Graph:
    return Graph.from_networkx(nx.cycle_graph(n))


def path(n: int) -> Graph:
    return Graph.from_networkx(nx.path_graph(n))


def complete_graph(n: int) -> Graph:
    return Graph.from_networkx(nx.complete_graph(n))


def star_graph(n: int) -> Graph:
    """K_{1,n-1} centred at node 0."""
    return Graph.from_networkx(nx.star_graph(n - 1))


def random_graphs(count: int, max_n: int, seed: int) -> List[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        g = nx.gnp_random_graph(n, rng.uniform(0.15, 0.7), seed=rng.randrange(1 << 30))
        out.append(Graph.from_networkx(g))
    return out


def connected_atlas_graphs(max_nodes: int = 7) -> List[Graph]:
    return [Graph.from_networkx(g) for g in nx.graph_atlas_g()
            if 1 <= g.number_of_nodes() <= max_nodes and nx.is_connected(g)]


# =============================================================================
# ORACLES
# =============================================================================

def brute_force_domination(graph: Graph, hops: int = 1) -> int:
    balls = closed_neighborhoods(graph, hops)
    everyone = set(range(graph.n))
    for size in range(graph.n + 1):
        for chosen in combinations(range(graph.n), size):
            covered = set()
            for c in chosen:
                covered |= balls[c]
            if covered == everyone:
                return size
    raise AssertionError("unreachable")


def brute_force_best_response(spec: GameSpec, profile: StrategyProfile, v: int):
    """(cost, strategy): the lexicographically first minimum feasible strategy, or (UNBOUNDED, None)."""
    others = [u for u in range(spec.n) if u != v]
    for size in range(len(others) + 1):
        for strategy in combinations(others, size):
            if player_cost(spec, profile.with_strategy(v, strategy), v) is not UNBOUNDED:
                return size, strategy
    return UNBOUNDED, None


def random_profile(rng: random.Random, n: int, density: float) -> StrategyProfile:
    return StrategyProfile.from_lists(
        [[u for u in range(n) if u != v and rng.random() < density] for v in range(n)])


def random_game(rng: random.Random, variant: Variant, n: int) -> GameSpec:
    if variant is Variant.MAX:
        return GameSpec(variant, tuple(rng.randint(1, 3) for _ in range(n)))
    return GameSpec(variant, tuple(rng.randint(n - 1, 2 * n) for _ in range(n)))


def distances_are_consistent(graph: Graph, source: int) -> bool:
    """Reachable endpoints of every edge differ by at most one level."""
    levels = bfs_levels(graph, source)
    for a, b in graph.edges():
        if (levels[a] < 0) != (levels[b] < 0):
            return False
        if levels[a] >= 0 and abs(levels[a] - levels[b]) > 1:
            return False
    return True


def edge_set(pairs: Iterable) -> set:
    return {(min(a, b), max(a, b)) for a, b in pairs}
