"""
G(S), per-player costs and social cost.
"""

from typing import Optional

from core.graph import UNBOUNDED, Graph, bfs_levels
from game.model import Cost, GameSpec, StrategyProfile, Variant


def build_graph(profile: StrategyProfile) -> Graph:
    """G(S): union of v x S_v; an edge bought by both endpoints appears once."""
    return Graph.from_edges(profile.n, ((v, u) for v, s in enumerate(profile.buys) for u in s))


def drop_player(profile: StrategyProfile, v: int) -> StrategyProfile:
    """S_{not v}: v buys nothing, everyone else keeps their strategy."""
    return profile.with_strategy(v, ())


def within_bound(spec: GameSpec, graph: Graph, v: int) -> bool:
    levels = bfs_levels(graph, v)
    if min(levels) < 0:
        return False
    if spec.variant is Variant.MAX:
        return max(levels) <= spec.bound(v)
    return sum(levels) <= spec.bound(v)


def player_cost(spec: GameSpec, profile: StrategyProfile, v: int, graph: Optional[Graph] = None) -> Cost:
    """|S_v| when v is within its bound in G(S), UNBOUNDED otherwise.

    Pass a prebuilt `graph` to avoid rebuilding G(S) for every player.
    """
    spec.check_player(v)
    if graph is None:
        graph = build_graph(profile)
    if within_bound(spec, graph, v):
        return len(profile.strategy(v))
    return UNBOUNDED


def social_cost(spec: GameSpec, profile: StrategyProfile, graph: Optional[Graph] = None) -> Cost:
    if graph is None:
        graph = build_graph(profile)
    total = 0
    for v in range(profile.n):
        cost = player_cost(spec, profile, v, graph)
        if cost is UNBOUNDED:
            return UNBOUNDED
        total += cost
    return total
