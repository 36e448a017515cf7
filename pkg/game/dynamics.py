"""
Best-response dynamics: players deviate one at a time to an exact best
response until a full pass changes nothing, a profile repeats, or the round
limit is reached.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, List, Optional, Tuple

import numpy as np

from core.cover import SolverBudget
from core.errors import ResourceLimitError
from game.best_response import best_response
from game.costs import player_cost
from game.model import BestResponseStatus, Cost, GameSpec, StrategyProfile, cost_to_json

logger = logging.getLogger(__name__)


class Schedule(str, Enum):
    ROUND_ROBIN = 'round-robin'
    RANDOM = 'random'


class Outcome(str, Enum):
    EQUILIBRIUM = 'equilibrium'
    CYCLE = 'cycle'
    LIMIT = 'limit'


@dataclass(frozen=True)
class TraceStep:
    round: int
    player: int
    old_strategy: Tuple[int, ...]
    new_strategy: Tuple[int, ...]
    old_cost: Cost
    new_cost: Cost

    def to_dict(self) -> dict:
        return {
            'round': self.round,
            'player': self.player,
            'old_strategy': list(self.old_strategy),
            'new_strategy': list(self.new_strategy),
            'old_cost': cost_to_json(self.old_cost),
            'new_cost': cost_to_json(self.new_cost),
        }


@dataclass
class DynamicsResult:
    outcome: Outcome
    profile: StrategyProfile
    rounds: int
    trace: List[TraceStep] = field(default_factory=list)
    # On CYCLE: the repeated state hash and the step index where it was first seen.
    repeated_hash: Optional[str] = None
    first_seen: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            'outcome': self.outcome.value,
            'rounds': self.rounds,
            'deviations': len(self.trace),
            'buys': self.profile.to_lists(),
            'repeated_hash': self.repeated_hash,
            'first_seen': self.first_seen,
        }


def _order(n: int, schedule: Schedule, rng: Optional[np.random.Generator]) -> List[int]:
    if schedule is Schedule.RANDOM:
        return [int(v) for v in rng.permutation(n)]
    return list(range(n))


def best_response_dynamics(spec: GameSpec, initial: StrategyProfile,
                           schedule: Schedule = Schedule.ROUND_ROBIN, seed: Optional[int] = None,
                           max_rounds: int = 100, budget: Optional[SolverBudget] = None,
                           on_step: Optional[Callable[[TraceStep], None]] = None) -> DynamicsResult:
    """
    Run sequential best-response dynamics.

    A player switches only when its exact best response is strictly cheaper
    than its current cost. RANDOM draws a fresh player order every round from
    a generator seeded with `seed`, so runs are reproducible. `on_step` is
    called with every deviation as soon as it is applied.

    A pass without deviations ends in EQUILIBRIUM only if every player is
    within its bound. A player with no feasible strategy at all keeps the
    run from converging, and it stops with LIMIT.

    Raises:
        ValueError: max_rounds < 1
        ResourceLimitError: a best response exhausted the budget
    """
    if max_rounds < 1:
        raise ValueError("max_rounds must be at least 1")
    spec.check_profile(initial)
    schedule = Schedule(schedule)
    rng = np.random.default_rng(seed) if schedule is Schedule.RANDOM else None

    profile = initial
    seen = {profile.state_hash(): 0}
    trace: List[TraceStep] = []

    for rnd in range(1, max_rounds + 1):
        changed = False
        stranded = []
        for v in _order(spec.n, schedule, rng):
            current = player_cost(spec, profile, v)
            br = best_response(spec, profile, v, budget)
            if br.status is BestResponseStatus.HEURISTIC_UPPER_BOUND:
                raise ResourceLimitError(br.expansions, f"best response of player {v} is not exact")
            if br.status is BestResponseStatus.INFEASIBLE:
                stranded.append(v)
                continue
            if not br.cost < current:
                continue

            step = TraceStep(rnd, v, tuple(sorted(profile.strategy(v))), br.strategy, current, br.cost)
            trace.append(step)
            profile = profile.with_strategy(v, br.strategy)
            changed = True
            logger.debug(f"round {rnd}: player {v} {step.old_strategy} -> {step.new_strategy}")
            if on_step is not None:
                on_step(step)

            digest = profile.state_hash()
            if digest in seen:
                logger.info(f"dynamics cycle after {len(trace)} deviations (state first seen at step {seen[digest]})")
                return DynamicsResult(Outcome.CYCLE, profile, rnd, trace, digest, seen[digest])
            seen[digest] = len(trace)

        if not changed:
            if stranded:
                logger.warning(f"dynamics stalled in round {rnd}: players {stranded} have no feasible strategy")
                return DynamicsResult(Outcome.LIMIT, profile, rnd, trace)
            logger.info(f"dynamics reached an equilibrium in round {rnd}")
            return DynamicsResult(Outcome.EQUILIBRIUM, profile, rnd, trace)

    logger.info(f"dynamics stopped at the round limit ({max_rounds})")
    return DynamicsResult(Outcome.LIMIT, profile, max_rounds, trace)
