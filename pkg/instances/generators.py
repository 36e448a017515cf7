"""
Equilibrium constructions: stars, complete graphs, the non-uniform clique
with pendant paths, the path-with-hubs family, the prime construction for
R=2, complete multipartite SUM equilibria and bound-one hubs.

Where a construction leaves the owner of an edge open (clique edges, cross
edges between groups) the lower-indexed endpoint buys it.
"""

import logging
from enum import Enum
from typing import Dict, Iterable, List, Optional, Set, Tuple

from core.errors import NotPrimeError
from game.model import GameSpec, StrategyProfile, Variant
from instances.instance import ExpectedClaims, Instance, Provenance

logger = logging.getLogger(__name__)


class StarOwner(str, Enum):
    CENTER = 'center'
    LEAVES = 'leaves'


def profile_from_purchases(n: int, purchases: Iterable[Tuple[int, int]]) -> StrategyProfile:
    """Profile from (buyer, target) pairs."""
    buys: List[Set[int]] = [set() for _ in range(n)]
    for buyer, target in purchases:
        buys[buyer].add(target)
    return StrategyProfile.from_lists(buys)


def _clique_purchases(nodes: List[int]) -> List[Tuple[int, int]]:
    ordered = sorted(nodes)
    return [(a, b) for i, a in enumerate(ordered) for b in ordered[i + 1:]]


def _default_bound(variant: Variant, n: int, max_bound: int, sum_bound: int, bound: Optional[int]) -> int:
    if bound is not None:
        return bound
    return max_bound if variant is Variant.MAX else sum_bound


# =============================================================================
# STAR / COMPLETE
# =============================================================================

def star(n: int, owner: StarOwner = StarOwner.LEAVES, variant: Variant = Variant.MAX,
         bound: Optional[int] = None) -> Instance:
    """Spanning star centred at node 0; MAX defaults to R=2, SUM to B=2n-3."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    owner = StarOwner(owner)
    variant = Variant(variant)
    b = _default_bound(variant, n, 2, max(2 * n - 3, n - 1), bound)
    if owner is StarOwner.CENTER:
        purchases = [(0, leaf) for leaf in range(1, n)]
    else:
        purchases = [(leaf, 0) for leaf in range(1, n)]

    stable = None
    if variant is Variant.MAX and b >= 2:
        stable = True
    elif variant is Variant.SUM and b >= 2 * n - 3:
        stable = True
    return Instance(
        GameSpec.uniform(variant, n, b),
        profile_from_purchases(n, purchases),
        Provenance('star', {'n': n, 'owner': owner.value, 'variant': variant.value, 'bound': b}),
        ExpectedClaims(stable=stable, social_cost=n - 1, diameter=1 if n == 2 else 2, optimum=n - 1),
    )


def complete(n: int, variant: Variant = Variant.MAX, bound: Optional[int] = None) -> Instance:
    """K_n with every edge bought by its lower-indexed endpoint; MAX defaults to R=1, SUM to B=n-1."""
    if n < 2:
        raise ValueError("complete graph needs n >= 2")
    variant = Variant(variant)
    b = _default_bound(variant, n, 1, n - 1, bound)
    m = n * (n - 1) // 2
    tight = (variant is Variant.MAX and b == 1) or (variant is Variant.SUM and b == n - 1)
    return Instance(
        GameSpec.uniform(variant, n, b),
        profile_from_purchases(n, _clique_purchases(list(range(n)))),
        Provenance('complete', {'n': n, 'variant': variant.value, 'bound': b}),
        ExpectedClaims(stable=True if tight else None, social_cost=m, diameter=1,
                       optimum=m if tight else None),
    )


# =============================================================================
# NON-UNIFORM BOUNDS: CLIQUE WITH PENDANT PATHS
# =============================================================================

def pendant_nodes(k: int, v: int) -> Dict[str, int]:
    """Ids of the two pendant paths v - v1_1 - v1_2 and v - v2_1 - v2_2 of clique node v."""
    base = k + 4 * v
    return {'1_1': base, '1_2': base + 1, '2_1': base + 2, '2_2': base + 3}


def nonuniform_clique_pendant(k: int, variant: Variant = Variant.MAX) -> Instance:
    """
    Clique on nodes 0..k-1; every clique node carries two pendant paths of
    length 2. The far pendant buys the edge to the near one, the near one
    buys the edge to the clique node.

    Bounds: MAX 3 on the clique and 5 elsewhere; SUM 11k-5 on the clique and
    n^2 elsewhere. Any star is a social optimum.
    """
    if k < 3:
        raise ValueError("clique with pendants needs k >= 3")
    variant = Variant(variant)
    n = 5 * k
    purchases = _clique_purchases(list(range(k)))
    for v in range(k):
        p = pendant_nodes(k, v)
        for j in ('1', '2'):
            purchases.append((p[f'{j}_2'], p[f'{j}_1']))
            purchases.append((p[f'{j}_1'], v))

    if variant is Variant.MAX:
        clique_bound, other_bound = 3, 5
    else:
        clique_bound, other_bound = 11 * k - 5, n * n
    bounds = tuple([clique_bound] * k + [other_bound] * (n - k))
    sc = k * (k - 1) // 2 + 4 * k
    return Instance(
        GameSpec(variant, bounds),
        profile_from_purchases(n, purchases),
        Provenance('clique-pendant', {'k': k, 'variant': variant.value}),
        ExpectedClaims(stable=True, social_cost=sc, diameter=5, optimum=n - 1),
    )


# =============================================================================
# PATH WITH HUBS
# =============================================================================

def path_hub(R: int, h: int) -> Instance:
    """
    Path u_1..u_2R (nodes 0..2R-1, u_j buys u_{j+1}) plus h hubs v_i (nodes
    2R..2R+h-1), each buying edges to both path ends. Uniform MAX bound R.
    """
    if R < 2:
        raise ValueError("path_hub needs R >= 2")
    if h < 1:
        raise ValueError("path_hub needs h >= 1")
    n = 2 * R + h
    last = 2 * R - 1
    purchases = [(j, j + 1) for j in range(last)]
    for v in range(2 * R, n):
        purchases += [(v, 0), (v, last)]
    return Instance(
        GameSpec.uniform(Variant.MAX, n, R),
        profile_from_purchases(n, purchases),
        Provenance('path-hub', {'R': R, 'h': h}),
        ExpectedClaims(stable=True, social_cost=(2 * R - 1) + 2 * h, diameter=R, optimum=n - 1),
    )


# =============================================================================
# PRIME CONSTRUCTION (R = 2)
# =============================================================================

def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PrimeTreeLayout:
    """Node numbering of the prime construction for a given p."""

    def __init__(self, p: int):
        self.p = p
        self.r = 0
        self.r_prime = 1 + p + p * p
        self.n = 2 * p * p + p + 2

    def c(self, i: int) -> int:
        return 1 + i

    def v(self, i: int, j: int) -> int:
        return 1 + self.p + i * self.p + j

    def u(self, i: int, j: int) -> int:
        return 2 + self.p + self.p * self.p + i * self.p + j

    @property
    def children(self) -> List[int]:
        return [self.c(i) for i in range(self.p)]

    @property
    def leaves(self) -> List[int]:
        """V-bar: the p^2 grandchildren of r."""
        return [self.v(i, j) for i in range(self.p) for j in range(self.p)]

    @property
    def star_leaves(self) -> List[int]:
        """U-bar: the p^2 leaves hanging from r'."""
        return [self.u(i, j) for i in range(self.p) for j in range(self.p)]

    def group(self, i: int) -> List[int]:
        return [self.u(i, j) for j in range(self.p)]

    def cross_edges(self) -> List[Tuple[int, int]]:
        """(u_{i,j}, v_{i',j'}) whenever j + i'*i = j' (mod p)."""
        p = self.p
        return [(self.u(i, j), self.v(ii, (j + ii * i) % p))
                for i in range(p) for j in range(p) for ii in range(p)]


def prime_tree(p: int) -> Instance:
    """
    Diameter-2 equilibrium with Theta(p^3) edges on 2p^2+p+2 nodes.

    r buys its p children and r'. Every leaf v of the p-ary tree buys its parent
    and all its cross edges (p+1 edges), every leaf of the star around r' buys
    the edge to r', clique edges inside C and each U_i go to the lower index.

    Raises:
        NotPrimeError: p is not a prime >= 3
    """
    if p < 3 or not is_prime(p):
        raise NotPrimeError(f"prime construction needs a prime p >= 3, got {p}")
    t = PrimeTreeLayout(p)
    purchases = [(t.r, c) for c in t.children] + [(t.r, t.r_prime)]
    for i in range(p):
        for j in range(p):
            purchases.append((t.v(i, j), t.c(i)))
    purchases += [(u, t.r_prime) for u in t.star_leaves]
    purchases += _clique_purchases(t.children)
    for i in range(p):
        purchases += _clique_purchases(t.group(i))
    purchases += [(v, u) for u, v in t.cross_edges()]

    m = (p + p * p) + p * p + 1 + p * (p - 1) // 2 + p * p * (p - 1) // 2 + p ** 3
    logger.debug(f"prime construction p={p}: n={t.n} m={m}")
    return Instance(
        GameSpec.uniform(Variant.MAX, t.n, 2),
        profile_from_purchases(t.n, purchases),
        Provenance('prime-tree', {'p': p}),
        ExpectedClaims(stable=True, social_cost=m, diameter=2, optimum=t.n - 1),
    )


def prime_tree_conditions(p: int) -> Tuple[bool, bool]:
    """
    Direct check of the two facts behind diameter 2:
      (i) every group U_i dominates V-bar,
     (ii) any two leaves under different children of r share a neighbour in U-bar.
    """
    if p < 3 or not is_prime(p):
        raise NotPrimeError(f"prime construction needs a prime p >= 3, got {p}")
    t = PrimeTreeLayout(p)
    adjacent: Dict[int, Set[int]] = {v: set() for v in t.leaves}
    for u, v in t.cross_edges():
        adjacent[v].add(u)

    group_of = {t.u(i, j): i for i in range(p) for j in range(p)}
    cond_i = all(any(group_of[u] == i for u in adjacent[v]) for i in range(p) for v in t.leaves)
    cond_ii = all(
        adjacent[t.v(i, j)] & adjacent[t.v(ii, jj)]
        for i in range(p) for j in range(p) for ii in range(i + 1, p) for jj in range(p)
    )
    return cond_i, bool(cond_ii)


# =============================================================================
# SUM: COMPLETE MULTIPARTITE
# =============================================================================

def multipartite_groups(n: int, k: int) -> List[List[int]]:
    """[V_0, V_1, ..., V_h]: h = n // (k+1) consecutive groups of size k+1, remainder V_0 at the end."""
    h = n // (k + 1)
    groups = [list(range(g * (k + 1), (g + 1) * (k + 1))) for g in range(h)]
    remainder = list(range(h * (k + 1), n))
    return [remainder] + groups


def multipartite_sum(n: int, k: int) -> Instance:
    """
    Complete multipartite graph with groups of size k+1 (plus a smaller
    remainder group V_0 whose nodes buy nothing) under SUM bound B = n-1+k.
    """
    if n < 2:
        raise ValueError("multipartite construction needs n >= 2")
    if not 0 <= k <= n - 2:
        raise ValueError(f"k must lie in [0, n-2], got {k}")
    groups = multipartite_groups(n, k)
    group_of = {v: g for g, members in enumerate(groups) for v in members}

    purchases = []
    for a in range(n):
        for b in range(a + 1, n):
            ga, gb = group_of[a], group_of[b]
            if ga == gb:
                continue
            if ga == 0:
                purchases.append((b, a))
            elif gb == 0:
                purchases.append((a, b))
            elif ga < gb:
                purchases.append((a, b))
            else:
                purchases.append((b, a))

    profile = profile_from_purchases(n, purchases)
    sizes = [len(g) for g in groups]
    m = (n * n - sum(s * s for s in sizes)) // 2
    return Instance(
        GameSpec.uniform(Variant.SUM, n, n - 1 + k),
        profile,
        Provenance('multipartite', {'n': n, 'k': k}),
        ExpectedClaims(stable=True, social_cost=m, diameter=1 if k == 0 else 2),
    )


# =============================================================================
# BOUND-ONE HUBS
# =============================================================================

def bound_one_hubs(n: int, ones: int) -> Instance:
    """
    MAX instance: players 0..ones-1 have bound 1 and buy edges to every node
    (among themselves the lower index buys); all other players have bound 2
    and buy nothing.
    """
    if n < 2:
        raise ValueError("bound-one hubs need n >= 2")
    if not 1 <= ones <= n:
        raise ValueError(f"ones must lie in [1, n], got {ones}")
    hubs = list(range(ones))
    purchases = _clique_purchases(hubs)
    purchases += [(h, u) for h in hubs for u in range(ones, n)]
    bounds = tuple([1] * ones + [2] * (n - ones))
    sc = ones * (ones - 1) // 2 + ones * (n - ones)
    return Instance(
        GameSpec(Variant.MAX, bounds),
        profile_from_purchases(n, purchases),
        Provenance('bound-one-hubs', {'n': n, 'ones': ones}),
        ExpectedClaims(stable=True, social_cost=sc, diameter=1 if ones == n else 2),
    )
