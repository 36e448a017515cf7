"""
BoundReport: social cost against the optimum plus every applicable check,
emitted as JSON or flat CSV rows.
"""

import csv
import io
import json
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from analysis.bounds import (CheckResult, CheckVerdict, OptimumEstimate, OptimumKind, optimum_estimate,
                             verify_ball_growth, verify_delta_bound, verify_gamma_bound, verify_pos_ratio,
                             verify_r2_envelope, verify_self_centered_rule, verify_sum_ball_growth,
                             verify_sum_slack_rule)
from core.cover import SolverBudget
from core.graph import UNBOUNDED
from game.model import Cost, EquilibriumReport, Variant, Verdict, cost_to_json
from instances.instance import Instance

logger = logging.getLogger(__name__)

CSV_COLUMNS = ['instance', 'check', 'measured', 'bound', 'verdict']

# Families whose construction witnesses SC <= 2 * optimum.
POS_WITNESS_FAMILIES = {'multipartite'}


@dataclass
class BoundReport:
    instance: str
    verdict: Verdict
    social_cost: Cost
    optimum: Optional[OptimumEstimate]
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def ratio(self) -> Optional[float]:
        if self.optimum is None or self.optimum.value <= 0 or self.social_cost is UNBOUNDED:
            return None
        return self.social_cost / self.optimum.value

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if c.verdict is CheckVerdict.FAIL]

    def to_dict(self) -> dict:
        return {
            'instance': self.instance,
            'verdict': self.verdict.value,
            'social_cost': cost_to_json(self.social_cost),
            'optimum': None if self.optimum is None else self.optimum.value,
            'optimum_kind': None if self.optimum is None else self.optimum.kind.value,
            'ratio': self.ratio,
            'checks': [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + '\n'

    def csv_rows(self) -> List[dict]:
        rows = [{
            'instance': self.instance,
            'check': 'ratio',
            'measured': json.dumps({'social_cost': cost_to_json(self.social_cost), 'ratio': self.ratio},
                                   sort_keys=True),
            'bound': '' if self.optimum is None else self.optimum.value,
            'verdict': '' if self.optimum is None else self.optimum.kind.value,
        }]
        for c in self.checks:
            rows.append({
                'instance': self.instance,
                'check': c.check,
                'measured': json.dumps(c.measured, sort_keys=True),
                'bound': '' if c.bound is None else c.bound,
                'verdict': c.verdict.value,
            })
        return rows

    def to_csv(self, header: bool = True) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_COLUMNS, lineterminator='\n')
        if header:
            writer.writeheader()
        writer.writerows(self.csv_rows())
        return buffer.getvalue()


def resolve_optimum(instance: Instance) -> Optional[OptimumEstimate]:
    """Optimum estimate for uniform games, else the optimum the construction supplies."""
    if instance.spec.is_uniform:
        try:
            return optimum_estimate(instance.spec)
        except ValueError as e:
            logger.warning(f"no optimum estimate for {instance.provenance.label()}: {e}")
            return None
    if instance.expected.optimum is not None:
        return OptimumEstimate(instance.expected.optimum, OptimumKind.EXACT)
    return None


def report(instance: Instance, equilibrium: EquilibriumReport,
           budget: Optional[SolverBudget] = None) -> BoundReport:
    """
    Assemble the ratio and every check that applies to the instance's variant.
    Checks only run on STABLE verdicts; UNKNOWN verdicts yield SKIPPED checks.
    """
    spec, profile = instance.spec, instance.profile
    verdict = equilibrium.verdict

    if spec.variant is Variant.MAX:
        checks = [
            verify_gamma_bound(spec, profile, verdict, budget),
            verify_delta_bound(spec, profile, verdict),
            verify_ball_growth(spec, profile, verdict, budget),
            verify_self_centered_rule(spec, profile, verdict),
            verify_r2_envelope(spec, profile, verdict, budget),
        ]
    else:
        checks = [
            verify_delta_bound(spec, profile, verdict),
            verify_sum_slack_rule(spec, profile, verdict),
            verify_sum_ball_growth(spec, profile, verdict),
        ]
        if instance.provenance.name in POS_WITNESS_FAMILIES:
            checks.append(verify_pos_ratio(spec, profile, verdict))
        else:
            checks.append(CheckResult('pos_ratio', CheckVerdict.NOT_APPLICABLE,
                                      detail="construction is not a stability witness"))

    result = BoundReport(
        instance=instance.provenance.label(),
        verdict=verdict,
        social_cost=equilibrium.social_cost,
        optimum=resolve_optimum(instance),
        checks=checks,
    )
    logger.info(f"{result.instance}: ratio={result.ratio} failures={len(result.failures)}")
    return result
