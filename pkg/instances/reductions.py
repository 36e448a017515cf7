"""
Hardness reductions used as solver oracles.

Both builders embed a connected graph G' and add an isolated player u whose
best response encodes a classic problem on G': minimum dominating set for
MAX, k-median for SUM.
"""

from itertools import combinations
from typing import Iterable, List, Optional, Tuple

from core.graph import Graph, bfs_levels, is_connected
from game.model import GameSpec, Variant
from instances.generators import profile_from_purchases
from instances.instance import Instance, Provenance


def _check_connected(graph: Graph):
    if graph.n == 0 or not is_connected(graph):
        raise ValueError("the embedded graph must be non-empty and connected")


def _embedded_purchases(graph: Graph) -> List[Tuple[int, int]]:
    return [(a, b) for a, b in graph.edges()]


def reduction_from_dominating_set(graph: Graph, R: int) -> Instance:
    """
    G' on nodes 0..N-1, two paths of R-2 extra nodes hanging off every vertex
    (each path node buys the edge towards the vertex side), and an isolated
    player u = n-1. Uniform MAX bound R; u's best response has size gamma(G').
    """
    if R < 2:
        raise ValueError("dominating-set reduction needs R >= 2")
    _check_connected(graph)
    N = graph.n
    length = R - 2
    purchases = _embedded_purchases(graph)
    node = N
    for w in range(N):
        for _ in range(2):
            parent = w
            for _ in range(length):
                purchases.append((node, parent))
                parent = node
                node += 1
    u = node
    n = u + 1
    return Instance(
        GameSpec.uniform(Variant.MAX, n, R),
        profile_from_purchases(n, purchases),
        Provenance('reduce-domset', {'N': N, 'R': R, 'edges': [list(e) for e in graph.edges()]}),
    )


def reduction_from_kmedian(graph: Graph, beta: int) -> Instance:
    """G' plus an isolated player u = N under uniform SUM bound B = beta + N."""
    if beta < 0:
        raise ValueError("beta must be non-negative")
    _check_connected(graph)
    N = graph.n
    n = N + 1
    return Instance(
        GameSpec.uniform(Variant.SUM, n, beta + N),
        profile_from_purchases(n, _embedded_purchases(graph)),
        Provenance('reduce-kmedian', {'N': N, 'beta': beta, 'edges': [list(e) for e in graph.edges()]}),
    )


def isolated_player(instance: Instance) -> int:
    """The player u added by either reduction."""
    return instance.n - 1


# =============================================================================
# K-MEDIAN BRUTE FORCE
# =============================================================================

def k_median_cost(graph: Graph, centers: Iterable[int]) -> int:
    """Sum over nodes of the distance to the nearest center."""
    centers = list(centers)
    if not centers:
        raise ValueError("k-median needs at least one center")
    best = [None] * graph.n
    for c in centers:
        for w, d in enumerate(bfs_levels(graph, c)):
            if d < 0:
                raise ValueError("k-median cost is undefined on a disconnected graph")
            if best[w] is None or d < best[w]:
                best[w] = d
    return sum(best)


def min_k_median(graph: Graph, k: int) -> int:
    return min(k_median_cost(graph, c) for c in combinations(range(graph.n), k))


def min_centers_within(graph: Graph, beta: int) -> Optional[int]:
    """Smallest k whose optimal k-median cost is at most beta (None if even k=N fails)."""
    for k in range(1, graph.n + 1):
        if min_k_median(graph, k) <= beta:
            return k
    return None
