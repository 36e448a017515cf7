"""
Nash equilibrium verification: every player's current cost against its
exact best response.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional

from config import Config
from core.cover import SolverBudget
from core.errors import ResourceLimitError
from core.graph import UNBOUNDED, Graph
from game.best_response import best_response
from game.costs import build_graph, player_cost, social_cost
from game.model import (BestResponseStatus, EquilibriumReport, GameSpec, PlayerRecord,
                        StrategyProfile, Verdict)

logger = logging.getLogger(__name__)


def _player_record(spec: GameSpec, profile: StrategyProfile, graph: Graph, v: int,
                   budget: Optional[SolverBudget]) -> PlayerRecord:
    current = player_cost(spec, profile, v, graph)
    try:
        br = best_response(spec, profile, v, budget)
    except ResourceLimitError as e:
        logger.warning(f"player {v}: best response not resolved ({e})")
        return PlayerRecord(v, current, None, None)
    deviation = br.strategy if br.cost < current else None
    return PlayerRecord(v, current, br.cost, br.status, deviation)


def is_improving(record: PlayerRecord) -> bool:
    return record.best_cost is not None and record.best_cost < record.current_cost


def is_equilibrium(spec: GameSpec, profile: StrategyProfile, budget: Optional[SolverBudget] = None,
                   jobs: Optional[int] = None) -> EquilibriumReport:
    """
    Check every player for a strictly cheaper strategy.

    Args:
        spec: game variant and bounds
        profile: the strategy profile under test
        budget: solver budget per best response
        jobs: worker threads for the per-player checks (defaults to Config.JOBS)

    Returns:
        EquilibriumReport. UNSTABLE carries the lowest-indexed improving player
        as witness (or an out-of-bound player with no feasible improvement).
        UNKNOWN is returned only when some player could not be resolved and no
        player is known to improve.
    """
    spec.check_profile(profile)
    graph = build_graph(profile)
    jobs = jobs or Config.JOBS

    if jobs > 1 and spec.n > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            records: List[PlayerRecord] = list(pool.map(
                lambda v: _player_record(spec, profile, graph, v, budget), range(spec.n)))
    else:
        records = [_player_record(spec, profile, graph, v, budget) for v in range(spec.n)]

    witness = next((r for r in records if is_improving(r)), None)
    if witness is None:
        witness = next((r for r in records if r.current_cost is UNBOUNDED), None)

    if witness is not None:
        verdict = Verdict.UNSTABLE
    elif any(not r.resolved for r in records):
        verdict = Verdict.UNKNOWN
    else:
        verdict = Verdict.STABLE

    report = EquilibriumReport(
        players=tuple(records),
        social_cost=social_cost(spec, profile, graph),
        purchases=profile.purchases,
        verdict=verdict,
        witness=witness,
    )
    logger.info(f"equilibrium check n={spec.n} {spec.variant.value}: {verdict.value} "
                f"(SC={report.social_cost}, unresolved={sum(not r.resolved for r in records)})")
    return report


def heuristic_records(report: EquilibriumReport) -> List[PlayerRecord]:
    return [r for r in report.players if r.status is BestResponseStatus.HEURISTIC_UPPER_BOUND]
