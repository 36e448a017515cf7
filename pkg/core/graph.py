"""
Graph core - immutable undirected simple graphs and the distance primitives
every game computation is built on (BFS, eccentricity, broadcast cost,
diameter/radius, graph powers, balls).
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

logger = logging.getLogger(__name__)


class _Unbounded:
    """Sentinel for an unreachable node / an infinite cost. Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return 'UNBOUNDED'

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash('UNBOUNDED')

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __reduce__(self):
        return (_Unbounded, ())


UNBOUNDED = _Unbounded()
UNREACHABLE = UNBOUNDED

Distance = Union[int, _Unbounded]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on nodes 0..n-1 with sorted adjacency tuples."""

    n: int
    adjacency: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError(f"adjacency has {len(self.adjacency)} rows for n={self.n}")
        for v, row in enumerate(self.adjacency):
            if any(b <= a for a, b in zip(row, row[1:])):
                raise ValueError(f"neighbors of {v} must be sorted and distinct")
            for u in row:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbor {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adjacency[u]:
                    raise ValueError(f"edge ({v},{u}) is not symmetric")

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        rows = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def empty(cls, n: int) -> 'Graph':
        return cls(n, tuple(() for _ in range(n)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> 'Graph':
        """Relabels nodes to 0..n-1 following sorted node order."""
        order = sorted(g.nodes())
        index = {node: i for i, node in enumerate(order)}
        return cls.from_edges(len(order), ((index[a], index[b]) for a, b in g.edges()))

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def add_edges(self, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """G+F"""
        return Graph.from_edges(self.n, list(self.edges()) + list(edges))

    def remove_edges(self, edges: Iterable[Tuple[int, int]]) -> 'Graph':
        """G-F"""
        drop = {(min(u, v), max(u, v)) for u, v in edges}
        return Graph.from_edges(self.n, (e for e in self.edges() if e not in drop))

    def induced_subgraph(self, nodes: Iterable[int]) -> 'Graph':
        """G[U], relabelled to 0..|U|-1 in sorted order of U."""
        keep = sorted(set(nodes))
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(keep), edges)

    # -------------------------------------------------------------------------
    # Accessors
    # -------------------------------------------------------------------------

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2


@dataclass(frozen=True)
class DistanceVector:
    source: int
    dist: Tuple[Distance, ...]

    def reachable(self, u: int) -> bool:
        return self.dist[u] is not UNREACHABLE

    @property
    def all_reachable(self) -> bool:
        return all(d is not UNREACHABLE for d in self.dist)


@dataclass(frozen=True)
class BallProfile:
    radius: int
    sizes: Tuple[int, ...]
    minimum: int


# =============================================================================
# BFS PRIMITIVES
# =============================================================================

def bfs_levels(graph: Graph, source: int, blocked: Optional[int] = None,
               limit: Optional[int] = None) -> List[int]:
    """Raw BFS: hop counts with -1 for unreachable.

    `blocked` is a node paths may not pass through (it is reported unreachable
    unless it is the source); `limit` stops the search at that depth.
    """
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    adjacency = graph.adjacency
    while queue:
        x = queue.popleft()
        d = dist[x]
        if limit is not None and d >= limit:
            continue
        for y in adjacency[x]:
            if dist[y] < 0 and y != blocked:
                dist[y] = d + 1
                queue.append(y)
    return dist


def bfs(graph: Graph, source: int) -> DistanceVector:
    if not 0 <= source < graph.n:
        raise ValueError(f"source {source} out of range for n={graph.n}")
    levels = bfs_levels(graph, source)
    return DistanceVector(source, tuple(UNREACHABLE if d < 0 else d for d in levels))


def distance_matrix(graph: Graph, blocked: Optional[int] = None) -> np.ndarray:
    """All-pairs hop counts as an int64 matrix, -1 marking unreachable pairs.

    With `blocked`, distances are measured in G minus that node; its row and
    column are all -1.
    """
    matrix = np.full((graph.n, graph.n), -1, dtype=np.int64)
    for s in range(graph.n):
        if s == blocked:
            continue
        matrix[s] = bfs_levels(graph, s, blocked=blocked)
    return matrix


def is_connected(graph: Graph) -> bool:
    if graph.n == 0:
        return True
    return min(bfs_levels(graph, 0)) >= 0


def eccentricity(graph: Graph, v: int) -> Distance:
    levels = bfs_levels(graph, v)
    if min(levels) < 0:
        return UNBOUNDED
    return max(levels)


def broadcast_cost(graph: Graph, v: int) -> Distance:
    levels = bfs_levels(graph, v)
    if min(levels) < 0:
        return UNBOUNDED
    return sum(levels)


def eccentricities(graph: Graph) -> List[Distance]:
    return [eccentricity(graph, v) for v in range(graph.n)]


def diameter(graph: Graph) -> Distance:
    return max(eccentricities(graph), default=0)


def radius(graph: Graph) -> Distance:
    return min(eccentricities(graph), default=0)


def is_self_centered(graph: Graph) -> bool:
    ecc = eccentricities(graph)
    if any(e is UNBOUNDED for e in ecc):
        return False
    return len(set(ecc)) <= 1


def graph_power(graph: Graph, k: int) -> Graph:
    if k < 1:
        raise ValueError("graph power requires k >= 1")
    rows = []
    for v in range(graph.n):
        levels = bfs_levels(graph, v, limit=k)
        rows.append(tuple(u for u, d in enumerate(levels) if d > 0))
    return Graph(graph.n, tuple(rows))


def ball_profile(graph: Graph, k: int) -> BallProfile:
    if k < 0:
        raise ValueError("ball radius must be non-negative")
    sizes = tuple(sum(1 for d in bfs_levels(graph, u, limit=k) if d >= 0) for u in range(graph.n))
    return BallProfile(k, sizes, min(sizes, default=0))


def min_degree(graph: Graph) -> int:
    return min((len(row) for row in graph.adjacency), default=0)


def closed_neighborhoods(graph: Graph, hops: int = 1, blocked: Optional[int] = None) -> List[frozenset]:
    """Nodes within `hops` of each node (itself included), avoiding `blocked`."""
    out = []
    for v in range(graph.n):
        if v == blocked:
            out.append(frozenset())
            continue
        levels = bfs_levels(graph, v, blocked=blocked, limit=hops)
        out.append(frozenset(u for u, d in enumerate(levels) if d >= 0))
    return out
