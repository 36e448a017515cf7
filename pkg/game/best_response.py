"""
Exact best responses.

MAX: a best response of v is a minimum set X of nodes such that every node
farther than R from v in G(S_{not v}) is within R-1 hops of some x in X, on
paths avoiding v. That is a set cover instance solved by core.cover.

SUM: a best response is a minimum X such that the broadcast cost of v after
buying X is at most B. Sizes are tried in increasing order; each size is a
lexicographic depth-first search pruned by the largest achievable distance
gain, seeded with a greedy + swap upper bound.

Every returned strategy is re-checked by BFS on the deviated profile.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from core.cover import BudgetMeter, SolverBudget, min_set_cover
from core.errors import ResourceLimitError
from core.graph import UNBOUNDED, bfs_levels, distance_matrix
from game.costs import build_graph, drop_player, player_cost
from game.model import BestResponse, BestResponseStatus, GameSpec, StrategyProfile, Variant

logger = logging.getLogger(__name__)


def best_response(spec: GameSpec, profile: StrategyProfile, v: int,
                  budget: Optional[SolverBudget] = None) -> BestResponse:
    if spec.variant is Variant.MAX:
        return best_response_max(spec, profile, v, budget)
    return best_response_sum(spec, profile, v, budget)


def _verified(spec: GameSpec, profile: StrategyProfile, v: int, strategy: Tuple[int, ...],
              status: BestResponseStatus, expansions: int = 0) -> BestResponse:
    cost = player_cost(spec, profile.with_strategy(v, strategy), v)
    if cost != len(strategy):
        raise RuntimeError(f"best response {strategy} of player {v} fails the BFS re-check (cost {cost})")
    return BestResponse(v, strategy, cost, status, expansions)


# =============================================================================
# MAX
# =============================================================================

def max_cover_instance(spec: GameSpec, profile: StrategyProfile, v: int):
    """Universe and coverage of the MAX best-response cover problem for player v."""
    radius = spec.bound(v)
    base = build_graph(drop_player(profile, v))
    levels = bfs_levels(base, v)
    universe = [u for u in range(base.n) if u != v and (levels[u] < 0 or levels[u] > radius)]
    coverage = {}
    if universe:
        adjacent = set(base.neighbors(v))
        for x in range(base.n):
            if x == v or x in adjacent:
                continue
            reach = bfs_levels(base, x, blocked=v, limit=radius - 1)
            coverage[x] = [u for u in universe if reach[u] >= 0]
    return universe, coverage


def best_response_max(spec: GameSpec, profile: StrategyProfile, v: int,
                      budget: Optional[SolverBudget] = None) -> BestResponse:
    if spec.variant is not Variant.MAX:
        raise ValueError("best_response_max needs a MAX game")
    spec.check_profile(profile)
    spec.check_player(v)

    universe, coverage = max_cover_instance(spec, profile, v)
    if not universe:
        return _verified(spec, profile, v, (), BestResponseStatus.EXACT)
    strategy = min_set_cover(universe, coverage, budget)
    logger.debug(f"MAX best response of {v}: |universe|={len(universe)} -> {strategy}")
    return _verified(spec, profile, v, tuple(strategy), BestResponseStatus.EXACT)


def domination_requirement(spec: GameSpec, profile: StrategyProfile, v: int,
                           budget: Optional[SolverBudget] = None) -> int:
    """
    Minimum number of nodes dominating every node farther than R from v in
    G(S_{not v})^{R-1}, computed on the power graph (paths may use v).
    A MAX player is in equilibrium iff it buys exactly this many edges.
    """
    radius = spec.bound(v)
    base = build_graph(drop_player(profile, v))
    levels = bfs_levels(base, v)
    far = [u for u in range(base.n) if levels[u] < 0 or levels[u] > radius]
    if not far:
        return 0
    balls = {x: [u for u, d in enumerate(bfs_levels(base, x, limit=radius - 1)) if d >= 0]
             for x in range(base.n)}
    return len(min_set_cover(far, balls, budget))


# =============================================================================
# SUM
# =============================================================================

class _SumSearch:
    """Lexicographic fixed-size search over candidate rows of a distance table."""

    def __init__(self, rows: np.ndarray, bound: int, meter: BudgetMeter):
        self.rows = rows
        self.bound = bound
        self.meter = meter

    def find(self, current: np.ndarray, size: int) -> Optional[List[int]]:
        return self._extend(0, [], current, size)

    def _extend(self, start: int, chosen: List[int], current: np.ndarray, left: int) -> Optional[List[int]]:
        self.meter.tick()
        total = int(current.sum())
        if left == 0:
            return list(chosen) if total <= self.bound else None
        # Sizes are tried in increasing order, so no proper prefix is ever feasible here.
        remaining = self.rows[start:]
        if len(remaining) < left:
            return None
        gains = np.maximum(current[None, :] - remaining, 0).sum(axis=1)
        if total - int(np.sort(gains)[-left:].sum()) > self.bound:
            return None
        for i in range(start, len(self.rows) - left + 1):
            found = self._extend(i + 1, chosen + [i], np.minimum(current, self.rows[i]), left - 1)
            if found is not None:
                return found
        return None


def _greedy_with_swaps(rows: np.ndarray, current: np.ndarray, bound: int) -> List[int]:
    """Greedy by largest distance gain, then shrink by single drops and 2-for-1 swaps."""

    def cost(selection):
        if not selection:
            return int(current.sum())
        return int(np.minimum(current, rows[selection].min(axis=0)).sum())

    chosen: List[int] = []
    state = current.copy()
    while int(state.sum()) > bound:
        totals = np.minimum(state[None, :], rows).sum(axis=1)
        best = int(np.argmin(totals))
        chosen.append(best)
        state = np.minimum(state, rows[best])

    improved = True
    while improved and chosen:
        improved = False
        for x in list(chosen):
            trial = [c for c in chosen if c != x]
            if cost(trial) <= bound:
                chosen = trial
                improved = True
                break
        if improved:
            continue
        outside = [y for y in range(len(rows)) if y not in chosen]
        for a in range(len(chosen)):
            for b in range(a + 1, len(chosen)):
                kept = [c for k, c in enumerate(chosen) if k not in (a, b)]
                for y in outside:
                    if cost(kept + [y]) <= bound:
                        chosen = kept + [y]
                        improved = True
                        break
                if improved:
                    break
            if improved:
                break
    return sorted(chosen)


def best_response_sum(spec: GameSpec, profile: StrategyProfile, v: int,
                      budget: Optional[SolverBudget] = None) -> BestResponse:
    """
    Minimum strategy keeping the broadcast cost of v within B_v.

    Returns:
        BestResponse with status EXACT, INFEASIBLE (even buying every edge
        exceeds B_v), or HEURISTIC_UPPER_BOUND when the budget ran out after
        the greedy solution was found.
    """
    if spec.variant is not Variant.SUM:
        raise ValueError("best_response_sum needs a SUM game")
    spec.check_profile(profile)
    spec.check_player(v)

    n = spec.n
    bound = spec.bound(v)
    if n == 1:
        return _verified(spec, profile, v, (), BestResponseStatus.EXACT)
    if n - 1 > bound:
        return BestResponse(v, (), UNBOUNDED, BestResponseStatus.INFEASIBLE)

    base = build_graph(drop_player(profile, v))
    hops = distance_matrix(base, blocked=v)
    # Unreachable pairs get a penalty above the bound, so any selection leaving a node unreachable is infeasible.
    penalty = bound + 1
    via = np.where(hops >= 0, hops + 1, penalty)
    via[:, v] = 0

    adjacent = base.neighbors(v)
    if adjacent:
        current = via[list(adjacent)].min(axis=0)
    else:
        current = np.full(n, penalty, dtype=np.int64)
    current[v] = 0

    candidates = [x for x in range(n) if x != v and x not in set(adjacent)]
    rows = via[candidates]

    if int(current.sum()) <= bound:
        return _verified(spec, profile, v, (), BestResponseStatus.EXACT)

    upper = _greedy_with_swaps(rows, current, bound)
    heuristic = tuple(candidates[i] for i in upper)

    meter = BudgetMeter(budget)
    search = _SumSearch(rows, bound, meter)
    try:
        for size in range(1, len(upper) + 1):
            found = search.find(current, size)
            if found is not None:
                strategy = tuple(candidates[i] for i in found)
                logger.debug(f"SUM best response of {v}: size {size}, expansions={meter.expansions}")
                return _verified(spec, profile, v, strategy, BestResponseStatus.EXACT, meter.expansions)
    except ResourceLimitError as e:
        logger.warning(f"SUM best response of {v} fell back to the heuristic bound: {e}")
        return _verified(spec, profile, v, heuristic, BestResponseStatus.HEURISTIC_UPPER_BOUND, e.expansions)
    raise RuntimeError(f"SUM search for player {v} missed the heuristic solution {heuristic}")
