import pytest

from analysis.bounds import CheckVerdict
from analysis.report import report
from core.cover import SolverBudget
from core.errors import ResourceLimitError
from game.costs import build_graph
from game.dynamics import Outcome, Schedule, best_response_dynamics
from game.equilibrium import is_equilibrium
from game.model import GameSpec, StrategyProfile, Variant, Verdict
from instances.generators import star
from instances.instance import Instance, Provenance
from tests.conftest import complete_graph


def test_equilibrium_start_stops_after_one_round():
    instance = star(6)
    result = best_response_dynamics(instance.spec, instance.profile)
    assert result.outcome is Outcome.EQUILIBRIUM
    assert result.rounds == 1
    assert result.trace == []
    assert result.profile == instance.profile


def test_empty_profile_with_radius_one_builds_the_clique():
    spec = GameSpec.uniform(Variant.MAX, 4, 1)
    result = best_response_dynamics(spec, StrategyProfile.empty(4))
    assert result.outcome is Outcome.EQUILIBRIUM
    assert result.rounds == 2
    assert result.profile.to_lists() == [[1, 2, 3], [2, 3], [3], []]
    assert build_graph(result.profile) == complete_graph(4)
    assert [step.player for step in result.trace] == [0, 1, 2]


def test_trace_records_costs():
    spec = GameSpec.uniform(Variant.MAX, 4, 1)
    first = best_response_dynamics(spec, StrategyProfile.empty(4)).trace[0]
    assert first.to_dict() == {
        'round': 1, 'player': 0, 'old_strategy': [], 'new_strategy': [1, 2, 3],
        'old_cost': 'unbounded', 'new_cost': 3,
    }


def test_round_limit():
    spec = GameSpec.uniform(Variant.MAX, 4, 1)
    result = best_response_dynamics(spec, StrategyProfile.empty(4), max_rounds=1)
    assert result.outcome is Outcome.LIMIT
    assert result.rounds == 1


def test_random_schedule_is_reproducible():
    spec = GameSpec.uniform(Variant.MAX, 7, 2)
    runs = [best_response_dynamics(spec, StrategyProfile.empty(7), Schedule.RANDOM, seed=7) for _ in range(2)]
    assert runs[0].to_dict() == runs[1].to_dict()
    assert [s.to_dict() for s in runs[0].trace] == [s.to_dict() for s in runs[1].trace]


def test_final_profile_of_equilibrium_outcome_is_stable():
    for variant, bound in ((Variant.MAX, 2), (Variant.SUM, 9)):
        spec = GameSpec.uniform(variant, 6, bound)
        result = best_response_dynamics(spec, StrategyProfile.empty(6), Schedule.RANDOM, seed=3)
        if result.outcome is Outcome.EQUILIBRIUM:
            assert is_equilibrium(spec, result.profile).verdict is Verdict.STABLE
        else:
            assert result.outcome in (Outcome.CYCLE, Outcome.LIMIT)


def test_cycle_result_reports_first_occurrence():
    spec = GameSpec.uniform(Variant.SUM, 5, 7)
    result = best_response_dynamics(spec, StrategyProfile.empty(5), max_rounds=50)
    if result.outcome is Outcome.CYCLE:
        assert result.repeated_hash is not None
        assert 0 <= result.first_seen < len(result.trace)
    else:
        assert result.repeated_hash is None


def test_rejects_non_positive_round_limit():
    spec = GameSpec.uniform(Variant.MAX, 3, 1)
    with pytest.raises(ValueError):
        best_response_dynamics(spec, StrategyProfile.empty(3), max_rounds=0)


def test_schedule_accepts_strings():
    spec = GameSpec.uniform(Variant.MAX, 3, 1)
    result = best_response_dynamics(spec, StrategyProfile.empty(3), 'random', seed=1)
    assert result.outcome is Outcome.EQUILIBRIUM


def test_inexact_best_response_aborts_the_run():
    instance = star(6, variant=Variant.SUM)
    budget = SolverBudget(max_expansions=0)
    assert is_equilibrium(instance.spec, instance.profile, budget).verdict is Verdict.UNKNOWN
    with pytest.raises(ResourceLimitError):
        best_response_dynamics(instance.spec, instance.profile, budget=budget)


def test_players_without_feasible_strategy_prevent_equilibrium():
    spec = GameSpec.uniform(Variant.SUM, 4, 2)
    empty = StrategyProfile.empty(4)
    assert is_equilibrium(spec, empty).verdict is Verdict.UNSTABLE
    result = best_response_dynamics(spec, empty)
    assert result.outcome is Outcome.LIMIT
    assert result.rounds == 1
    assert result.trace == []


def test_steps_are_reported_as_applied():
    spec = GameSpec.uniform(Variant.MAX, 4, 1)
    seen = []
    result = best_response_dynamics(spec, StrategyProfile.empty(4), on_step=seen.append)
    assert seen == result.trace


@pytest.mark.parametrize("variant,n,bound,seed", [
    (Variant.MAX, 4, 1, None), (Variant.MAX, 6, 2, 3), (Variant.MAX, 7, 2, 11), (Variant.MAX, 7, 3, 5),
    (Variant.SUM, 6, 9, 3),
])
def test_converged_profiles_pass_the_bound_checks(variant, n, bound, seed):
    spec = GameSpec.uniform(variant, n, bound)
    schedule = Schedule.RANDOM if seed is not None else Schedule.ROUND_ROBIN
    result = best_response_dynamics(spec, StrategyProfile.empty(n), schedule, seed)
    if result.outcome is not Outcome.EQUILIBRIUM:
        pytest.skip(f"dynamics ended in {result.outcome.value}")
    instance = Instance(spec, result.profile, Provenance('dynamics', {'n': n, 'bound': bound}))
    equilibrium = is_equilibrium(spec, result.profile)
    assert equilibrium.verdict is Verdict.STABLE
    bounds = report(instance, equilibrium)
    assert bounds.failures == []
    assert any(c.verdict is CheckVerdict.PASS for c in bounds.checks)
