"""
Structural bounds every equilibrium must satisfy, run as bug detectors on
verified STABLE profiles, plus the social-optimum estimate used for ratios.

Each verifier returns a CheckResult whose verdict can be recomputed from
its `measured` values and `bound`. A verifier called on a profile that is
not known to be stable, on the wrong variant or on a non-uniform spec
returns NOT_APPLICABLE; an exhausted solver budget returns SKIPPED.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from core.cover import SolverBudget, harmonic_number, min_distance_dominating_set
from core.errors import NonUniformSpecError, ResourceLimitError
from core.graph import (UNBOUNDED, Graph, ball_profile, broadcast_cost, diameter, is_self_centered,
                        min_degree)
from core.utils import DOMINATION_CACHE
from game.costs import build_graph, social_cost
from game.model import GameSpec, StrategyProfile, Variant, Verdict, cost_to_json

logger = logging.getLogger(__name__)


class CheckVerdict(str, Enum):
    PASS = 'pass'
    FAIL = 'fail'
    SKIPPED = 'skipped'
    NOT_APPLICABLE = 'not_applicable'


class OptimumKind(str, Enum):
    EXACT = 'exact'
    LOWER_BOUND = 'lower_bound'


@dataclass(frozen=True)
class OptimumEstimate:
    value: int
    kind: OptimumKind


@dataclass
class CheckResult:
    check: str
    verdict: CheckVerdict
    measured: Dict[str, Any] = field(default_factory=dict)
    bound: Optional[float] = None
    detail: str = ''

    @property
    def passed(self) -> bool:
        return self.verdict is CheckVerdict.PASS

    def to_dict(self) -> dict:
        return {
            'check': self.check,
            'verdict': self.verdict.value,
            'measured': self.measured,
            'bound': self.bound,
            'detail': self.detail,
        }


# =============================================================================
# OPTIMUM
# =============================================================================

def optimum_estimate(spec: GameSpec) -> OptimumEstimate:
    """
    Social optimum of a uniform game, exact where a spanning star (or K_n) is
    optimal, otherwise the lower bound n(n-1-k)/2 with B = n-1+k.

    Raises:
        NonUniformSpecError: the optimum of a non-uniform game must be supplied
        ValueError: SUM bound below n-1 (no outcome keeps anyone within bound)
    """
    if not spec.is_uniform:
        raise NonUniformSpecError("optimum estimate needs uniform bounds; supply the optimum explicitly")
    n = spec.n
    bound = spec.bound(0)
    if n == 1:
        return OptimumEstimate(0, OptimumKind.EXACT)
    if spec.variant is Variant.MAX:
        if bound >= 2:
            return OptimumEstimate(n - 1, OptimumKind.EXACT)
        return OptimumEstimate(n * (n - 1) // 2, OptimumKind.EXACT)

    if bound >= 2 * n - 3:
        return OptimumEstimate(n - 1, OptimumKind.EXACT)
    if bound < n - 1:
        raise ValueError(f"SUM bound {bound} is below n-1={n - 1}")
    k = bound - (n - 1)
    return OptimumEstimate(max(n - 1, math.ceil(n * (n - 1 - k) / 2)), OptimumKind.LOWER_BOUND)


# =============================================================================
# MEASUREMENTS
# =============================================================================

def domination_number(graph: Graph, hops: int, budget: Optional[SolverBudget] = None) -> int:
    """gamma(G^hops), memoised per (graph, hops); hops <= 0 gives n."""
    return DOMINATION_CACHE.get_or_compute(
        (graph, hops), lambda: len(min_distance_dominating_set(graph, hops, budget)))


def _gate(name: str, spec: GameSpec, verdict: Optional[Verdict], variants) -> Optional[CheckResult]:
    """NOT_APPLICABLE / SKIPPED result when the check's preconditions do not hold."""
    if verdict is Verdict.UNKNOWN:
        return CheckResult(name, CheckVerdict.SKIPPED, detail="equilibrium verdict unknown")
    if verdict is None:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="profile not verified")
    if verdict is not Verdict.STABLE:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="profile is not stable")
    if spec.variant not in variants:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail=f"not defined for {spec.variant.value}")
    if not spec.is_uniform:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="non-uniform bounds")
    return None


def _judge(name: str, ok: bool, measured: Dict[str, Any], bound: Optional[float], detail: str = '') -> CheckResult:
    measured = {k: cost_to_json(v) for k, v in measured.items()}
    verdict = CheckVerdict.PASS if ok else CheckVerdict.FAIL
    if not ok:
        logger.error(f"{name} violated on a stable profile: measured={measured} bound={bound} {detail}")
    return CheckResult(name, verdict, measured, bound, detail)


def _skipped(name: str, error: ResourceLimitError) -> CheckResult:
    logger.warning(f"{name} skipped: {error}")
    return CheckResult(name, CheckVerdict.SKIPPED, detail=str(error))


# =============================================================================
# MAX CHECKS
# =============================================================================

def verify_gamma_bound(spec: GameSpec, profile: StrategyProfile, verdict: Optional[Verdict] = None,
                       budget: Optional[SolverBudget] = None) -> CheckResult:
    """SC <= (gamma(G^{R-1}) + 1)(n-1)."""
    name = 'gamma_bound'
    gated = _gate(name, spec, verdict, (Variant.MAX,))
    if gated:
        return gated
    graph = build_graph(profile)
    n = spec.n
    try:
        gamma = domination_number(graph, spec.bound(0) - 1, budget)
    except ResourceLimitError as e:
        return _skipped(name, e)
    sc = social_cost(spec, profile, graph)
    bound = (gamma + 1) * (n - 1)
    return _judge(name, sc <= bound, {'social_cost': sc, 'gamma': gamma}, bound)


def verify_delta_bound(spec: GameSpec, profile: StrategyProfile, verdict: Optional[Verdict] = None) -> CheckResult:
    """SC <= (delta + 1)(n-1); holds for MAX and uniform SUM equilibria."""
    name = 'delta_bound'
    gated = _gate(name, spec, verdict, (Variant.MAX, Variant.SUM))
    if gated:
        return gated
    graph = build_graph(profile)
    delta = min_degree(graph)
    sc = social_cost(spec, profile, graph)
    bound = (delta + 1) * (spec.n - 1)
    return _judge(name, sc <= bound, {'social_cost': sc, 'delta': delta}, bound)


def verify_ball_growth(spec: GameSpec, profile: StrategyProfile, verdict: Optional[Verdict] = None,
                       budget: Optional[SolverBudget] = None) -> CheckResult:
    """beta_{3k+1} >= min(n, gamma * beta_k) for k = 1..diameter, gamma of G^{R-1}."""
    name = 'ball_growth'
    gated = _gate(name, spec, verdict, (Variant.MAX,))
    if gated:
        return gated
    graph = build_graph(profile)
    n = spec.n
    try:
        gamma = domination_number(graph, spec.bound(0) - 1, budget)
    except ResourceLimitError as e:
        return _skipped(name, e)

    diam = diameter(graph)
    if diam is UNBOUNDED:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="graph is disconnected")
    rows = []
    ok = True
    for k in range(1, max(1, diam) + 1):
        small = ball_profile(graph, k).minimum
        large = ball_profile(graph, 3 * k + 1).minimum
        needed = min(n, gamma * small)
        rows.append({'k': k, 'beta_k': small, 'beta_3k_plus_1': large, 'needed': needed})
        if large < needed:
            ok = False
    return _judge(name, ok, {'gamma': gamma, 'diameter': diam, 'balls': rows}, None)


def verify_self_centered_rule(spec: GameSpec, profile: StrategyProfile,
                              verdict: Optional[Verdict] = None) -> CheckResult:
    """A stable MAX graph that is not self-centered has SC <= 2(n-1)."""
    name = 'self_centered_rule'
    gated = _gate(name, spec, verdict, (Variant.MAX,))
    if gated:
        return gated
    graph = build_graph(profile)
    centered = is_self_centered(graph)
    sc = social_cost(spec, profile, graph)
    bound = 2 * (spec.n - 1)
    return _judge(name, centered or sc <= bound, {'social_cost': sc, 'self_centered': centered}, bound)


def verify_r2_envelope(spec: GameSpec, profile: StrategyProfile, verdict: Optional[Verdict] = None,
                       budget: Optional[SolverBudget] = None) -> CheckResult:
    """
    R = 2: SC/(n-1) <= min(delta+1, n*H_{delta+1}/(delta+1) + 1), and the
    exact domination number respects gamma(G) <= n*H_{delta+1}/(delta+1).
    """
    name = 'r2_envelope'
    gated = _gate(name, spec, verdict, (Variant.MAX,))
    if gated:
        return gated
    if spec.bound(0) != 2:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="only defined for R=2")
    graph = build_graph(profile)
    n = spec.n
    delta = min_degree(graph)
    try:
        gamma = domination_number(graph, 1, budget)
    except ResourceLimitError as e:
        return _skipped(name, e)
    lovasz = n * harmonic_number(delta + 1) / (delta + 1)
    sc = social_cost(spec, profile, graph)
    ratio = sc / (n - 1) if n > 1 else 0.0
    bound = min(delta + 1, lovasz + 1)
    ok = ratio <= bound + 1e-9 and gamma <= lovasz + 1e-9
    return _judge(name, ok, {'ratio': ratio, 'delta': delta, 'gamma': gamma, 'lovasz': lovasz}, bound)


# =============================================================================
# SUM CHECKS
# =============================================================================

def verify_sum_slack_rule(spec: GameSpec, profile: StrategyProfile,
                          verdict: Optional[Verdict] = None) -> CheckResult:
    """If some node has broadcast cost <= B - n then SC <= 2(n-1)."""
    name = 'sum_slack_rule'
    gated = _gate(name, spec, verdict, (Variant.SUM,))
    if gated:
        return gated
    graph = build_graph(profile)
    n = spec.n
    costs = [broadcast_cost(graph, v) for v in range(n)]
    slack_nodes = [v for v, c in enumerate(costs) if c <= spec.bound(0) - n]
    sc = social_cost(spec, profile, graph)
    bound = 2 * (n - 1)
    measured = {'social_cost': sc, 'min_broadcast': min(costs), 'slack_nodes': len(slack_nodes)}
    return _judge(name, not slack_nodes or sc <= bound, measured, bound)


def verify_sum_ball_growth(spec: GameSpec, profile: StrategyProfile,
                           verdict: Optional[Verdict] = None) -> CheckResult:
    """beta_{3k+2} >= min(n/2 + 1, floor(rho) * beta_k) with rho = SC/(n-1), k = 1..diameter."""
    name = 'sum_ball_growth'
    gated = _gate(name, spec, verdict, (Variant.SUM,))
    if gated:
        return gated
    graph = build_graph(profile)
    n = spec.n
    if n < 2:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="single node")
    sc = social_cost(spec, profile, graph)
    rho = sc / (n - 1)
    diam = diameter(graph)
    if diam is UNBOUNDED:
        return CheckResult(name, CheckVerdict.NOT_APPLICABLE, detail="graph is disconnected")
    rows = []
    ok = True
    for k in range(1, max(1, diam) + 1):
        small = ball_profile(graph, k).minimum
        large = ball_profile(graph, 3 * k + 2).minimum
        needed = min(n / 2 + 1, math.floor(rho) * small)
        rows.append({'k': k, 'beta_k': small, 'beta_3k_plus_2': large, 'needed': needed})
        if large < needed:
            ok = False
    return _judge(name, ok, {'rho': rho, 'diameter': diam, 'balls': rows}, None)


def verify_pos_ratio(spec: GameSpec, profile: StrategyProfile, verdict: Optional[Verdict] = None) -> CheckResult:
    """SC <= 2 * optimum estimate; the price-of-stability witness for n-1 <= B < 2n-3."""
    name = 'pos_ratio'
    gated = _gate(name, spec, verdict, (Variant.SUM,))
    if gated:
        return gated
    optimum = optimum_estimate(spec)
    sc = social_cost(spec, profile)
    bound = 2 * optimum.value
    return _judge(name, sc <= bound, {'social_cost': sc, 'optimum': optimum.value,
                                      'optimum_kind': optimum.kind.value}, bound)
