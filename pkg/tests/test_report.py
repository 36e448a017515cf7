import csv
import io
import json

import jsonschema

from analysis.bounds import CheckVerdict, OptimumKind
from analysis.report import CSV_COLUMNS, report, resolve_optimum
from core.cover import SolverBudget
from game.equilibrium import is_equilibrium
from game.model import Verdict
from instances.generators import multipartite_sum, nonuniform_clique_pendant, prime_tree, star
from instances.ring import ring_family
from schemas import BOUND_REPORT_SCHEMA


def _report(instance, budget=None):
    return report(instance, is_equilibrium(instance.spec, instance.profile, budget), budget)


def test_prime_tree_report():
    result = _report(prime_tree(3))
    assert result.verdict is Verdict.STABLE
    assert result.optimum.value == 22
    assert result.ratio == 61 / 22
    assert result.failures == []
    assert {c.check for c in result.checks} == {
        'gamma_bound', 'delta_bound', 'ball_growth', 'self_centered_rule', 'r2_envelope'}


def test_multipartite_report_runs_pos_ratio():
    result = _report(multipartite_sum(8, 3))
    checks = {c.check: c for c in result.checks}
    assert checks['pos_ratio'].verdict is CheckVerdict.PASS
    assert result.optimum.kind is OptimumKind.LOWER_BOUND
    assert result.ratio == 1.0


def test_other_sum_families_skip_pos_ratio():
    result = _report(star(6, variant='sum'))
    checks = {c.check: c for c in result.checks}
    assert checks['pos_ratio'].verdict is CheckVerdict.NOT_APPLICABLE


def test_ring_ratio():
    result = _report(ring_family(3, 2))
    assert result.verdict is Verdict.STABLE
    assert result.social_cost == 12
    assert result.failures == []


def test_non_uniform_uses_supplied_optimum():
    instance = nonuniform_clique_pendant(4)
    estimate = resolve_optimum(instance)
    assert (estimate.value, estimate.kind) == (19, OptimumKind.EXACT)
    result = _report(instance)
    assert result.ratio == 22 / 19
    assert all(c.verdict is CheckVerdict.NOT_APPLICABLE for c in result.checks)


def test_unstable_instance_has_no_failures():
    result = _report(star(5, bound=1))
    assert result.verdict is Verdict.UNSTABLE
    assert result.ratio is None
    assert all(c.verdict is CheckVerdict.NOT_APPLICABLE for c in result.checks)


def test_unknown_verdict_skips_checks():
    result = _report(prime_tree(3), SolverBudget(max_expansions=1))
    assert result.verdict is Verdict.UNKNOWN
    assert all(c.verdict is CheckVerdict.SKIPPED for c in result.checks)


def test_json_matches_schema():
    data = json.loads(_report(prime_tree(3)).to_json())
    jsonschema.validate(instance=data, schema=BOUND_REPORT_SCHEMA)
    assert data['instance'] == 'prime-tree(p=3)'
    assert data['optimum_kind'] == 'exact'


def test_csv_rows():
    result = _report(star(6))
    rows = list(csv.DictReader(io.StringIO(result.to_csv())))
    assert list(rows[0].keys()) == CSV_COLUMNS
    assert rows[0]['check'] == 'ratio'
    assert rows[0]['verdict'] == 'exact'
    assert json.loads(rows[0]['measured']) == {'social_cost': 5, 'ratio': 1.0}
    assert [r['check'] for r in rows[1:]] == [c.check for c in result.checks]
    first = next(csv.reader(io.StringIO(result.to_csv(header=False))))
    assert first[0] == 'star(bound=2,n=6,owner=leaves,variant=max)'
