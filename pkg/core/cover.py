"""
Exact set cover and domination solvers.

min_set_cover is a depth-first branch and bound over bitmasks:
  - greedy incumbent bounds the search from above,
  - the uncovered element with the fewest remaining candidates is branched on
    (a single candidate means the choice is forced),
  - ceil(|uncovered| / best single coverage) bounds it from below,
  - among all minimum covers the lexicographically smallest sorted candidate
    sequence is returned.

Every call runs under a SolverBudget; exhausting it raises ResourceLimitError.
"""

import logging
import time
from dataclasses import dataclass
from typing import Hashable, Iterable, List, Mapping, Optional, Tuple

from config import Config
from core.errors import InfeasibleCoverError, ResourceLimitError
from core.graph import Graph, closed_neighborhoods

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolverBudget:
    max_expansions: int = 10_000_000
    timeout: Optional[float] = None

    @classmethod
    def from_config(cls) -> 'SolverBudget':
        return cls(max_expansions=Config.BUDGET, timeout=Config.TIMEOUT)


class BudgetMeter:
    """Counts search-node expansions against a SolverBudget."""

    def __init__(self, budget: Optional[SolverBudget] = None):
        self.budget = budget or SolverBudget.from_config()
        self.expansions = 0
        self.deadline = None
        if self.budget.timeout is not None:
            self.deadline = time.monotonic() + self.budget.timeout

    def tick(self):
        self.expansions += 1
        if self.expansions > self.budget.max_expansions:
            raise ResourceLimitError(self.expansions)
        if self.deadline is not None and (self.expansions & 0xFF) == 0 and time.monotonic() > self.deadline:
            raise ResourceLimitError(self.expansions, "wall-clock limit exceeded")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _CoverSearch:

    def __init__(self, masks: List[int], elem_cands: List[int], meter: BudgetMeter):
        self.masks = masks
        self.elem_cands = elem_cands
        self.meter = meter

    def find(self, uncovered: int, allowed: int, left: int) -> Optional[List[int]]:
        """Any cover of `uncovered` using at most `left` candidates from `allowed`."""
        self.meter.tick()
        if uncovered == 0:
            return []
        if left <= 0:
            return None

        branch_opts = 0
        branch_count = None
        for e in _bits(uncovered):
            opts = self.elem_cands[e] & allowed
            count = opts.bit_count()
            if count == 0:
                return None
            if branch_count is None or count < branch_count:
                branch_opts, branch_count = opts, count
                if count == 1:
                    break

        if branch_count > 1:
            best_cover = max((self.masks[i] & uncovered).bit_count() for i in _bits(allowed))
            needed = -(-uncovered.bit_count() // best_cover)
            if needed > left:
                return None

        tried = 0
        for i in _bits(branch_opts):
            rest = self.find(uncovered & ~self.masks[i], allowed & ~tried & ~(1 << i), left - 1)
            if rest is not None:
                return [i] + rest
            tried |= 1 << i
        return None


def greedy_set_cover(universe: Iterable[Hashable], coverage: Mapping[Hashable, Iterable[Hashable]]) -> Tuple:
    """Classic greedy cover; ties go to the smallest candidate id."""
    remaining = set(universe)
    sets = {c: set(cov) & remaining for c, cov in coverage.items()}
    chosen = []
    while remaining:
        best = None
        best_gain = 0
        for c in sorted(sets):
            gain = len(sets[c] & remaining)
            if gain > best_gain:
                best, best_gain = c, gain
        if best is None:
            raise InfeasibleCoverError(remaining)
        chosen.append(best)
        remaining -= sets[best]
    return tuple(sorted(chosen))


def min_set_cover(universe: Iterable[Hashable], coverage: Mapping[Hashable, Iterable[Hashable]],
                  budget: Optional[SolverBudget] = None) -> Tuple:
    """
    Minimum-cardinality cover of `universe` by the candidate sets in `coverage`.

    Args:
        universe: elements to cover
        coverage: candidate id -> elements it covers (elements outside the universe are ignored)
        budget: resource limits, defaults to the configured budget

    Returns:
        Sorted tuple of candidate ids; the lexicographically smallest among minimum covers.

    Raises:
        InfeasibleCoverError: some element is covered by no candidate
        ResourceLimitError: the budget ran out before optimality was proven
    """
    elements = sorted(set(universe))
    if not elements:
        return ()
    index = {e: i for i, e in enumerate(elements)}

    candidates = []
    masks = []
    for c in sorted(coverage):
        mask = 0
        for e in coverage[c]:
            i = index.get(e)
            if i is not None:
                mask |= 1 << i
        if mask:
            candidates.append(c)
            masks.append(mask)

    full = (1 << len(elements)) - 1
    reach = 0
    for mask in masks:
        reach |= mask
    if reach != full:
        raise InfeasibleCoverError(elements[i] for i in _bits(full & ~reach))

    elem_cands = [0] * len(elements)
    for ci, mask in enumerate(masks):
        for e in _bits(mask):
            elem_cands[e] |= 1 << ci

    meter = BudgetMeter(budget)
    search = _CoverSearch(masks, elem_cands, meter)
    all_cands = (1 << len(candidates)) - 1

    incumbent = greedy_set_cover(elements, {i: [elements[e] for e in _bits(m)] for i, m in enumerate(masks)})
    best_single = max(m.bit_count() for m in masks)
    lower = -(-len(elements) // best_single)

    optimum = len(incumbent)
    for size in range(lower, len(incumbent)):
        if search.find(full, all_cands, size) is not None:
            optimum = size
            break
    logger.debug(f"set cover: |U|={len(elements)} candidates={len(candidates)} "
                 f"greedy={len(incumbent)} optimum={optimum} expansions={meter.expansions}")

    # Fix candidates in ascending order while a cover of the optimal size stays reachable.
    chosen = []
    uncovered = full
    allowed = all_cands
    left = optimum
    for i in range(len(candidates)):
        if uncovered == 0:
            break
        allowed &= ~(1 << i)
        if not masks[i] & uncovered:
            continue
        if search.find(uncovered & ~masks[i], allowed, left - 1) is not None:
            chosen.append(i)
            uncovered &= ~masks[i]
            left -= 1
    return tuple(candidates[i] for i in chosen)


# =============================================================================
# DOMINATION
# =============================================================================

def min_dominating_set(graph: Graph, budget: Optional[SolverBudget] = None) -> Tuple[int, ...]:
    return min_distance_dominating_set(graph, 1, budget)


def min_distance_dominating_set(graph: Graph, hops: int, budget: Optional[SolverBudget] = None) -> Tuple[int, ...]:
    """Minimum dominating set of G^hops (hops=0 means every node dominates only itself)."""
    if hops <= 0:
        return tuple(range(graph.n))
    balls = closed_neighborhoods(graph, hops)
    return min_set_cover(range(graph.n), {v: balls[v] for v in range(graph.n)}, budget)


def greedy_dominating_set(graph: Graph) -> Tuple[int, ...]:
    balls = closed_neighborhoods(graph, 1)
    return greedy_set_cover(range(graph.n), {v: balls[v] for v in range(graph.n)})


def harmonic_number(i: int) -> float:
    return sum(1.0 / j for j in range(1, i + 1))
