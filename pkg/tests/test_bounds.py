import pytest

from analysis.bounds import (CheckVerdict, OptimumKind, domination_number, optimum_estimate, verify_ball_growth,
                             verify_delta_bound, verify_gamma_bound, verify_pos_ratio, verify_r2_envelope,
                             verify_self_centered_rule, verify_sum_ball_growth, verify_sum_slack_rule)
from core.cover import SolverBudget
from core.errors import NonUniformSpecError
from game.model import GameSpec, Variant, Verdict
from instances.gadgets import gadget_with_pendants, petersen
from instances.generators import (complete, multipartite_sum, nonuniform_clique_pendant, path_hub, prime_tree,
                                  star)
from instances.ring import ring_family
from tests.conftest import cycle

MAX_CHECKS = (verify_delta_bound, verify_self_centered_rule)
MAX_BUDGETED = (verify_gamma_bound, verify_ball_growth, verify_r2_envelope)
SUM_CHECKS = (verify_delta_bound, verify_sum_slack_rule, verify_sum_ball_growth)


class TestOptimumEstimate:

    def test_max_radius_two_is_a_star(self):
        estimate = optimum_estimate(GameSpec.uniform(Variant.MAX, 23, 2))
        assert (estimate.value, estimate.kind) == (22, OptimumKind.EXACT)

    def test_max_radius_one_is_the_clique(self):
        estimate = optimum_estimate(GameSpec.uniform(Variant.MAX, 4, 1))
        assert (estimate.value, estimate.kind) == (6, OptimumKind.EXACT)

    def test_sum_star_regime(self):
        estimate = optimum_estimate(GameSpec.uniform(Variant.SUM, 6, 9))
        assert (estimate.value, estimate.kind) == (5, OptimumKind.EXACT)

    def test_sum_lower_bound(self):
        estimate = optimum_estimate(GameSpec.uniform(Variant.SUM, 8, 10))
        assert (estimate.value, estimate.kind) == (16, OptimumKind.LOWER_BOUND)

    def test_sum_lower_bound_never_below_a_tree(self):
        estimate = optimum_estimate(GameSpec.uniform(Variant.SUM, 102, 200))
        assert estimate.value == 102
        assert estimate.kind is OptimumKind.LOWER_BOUND

    def test_sum_bound_below_n_minus_one(self):
        with pytest.raises(ValueError):
            optimum_estimate(GameSpec.uniform(Variant.SUM, 6, 3))

    def test_non_uniform_raises(self):
        with pytest.raises(NonUniformSpecError):
            optimum_estimate(nonuniform_clique_pendant(3).spec)


class TestMaxChecks:

    @pytest.mark.parametrize("instance", [
        star(6), complete(5), path_hub(3, 5), path_hub(3, 100), prime_tree(3), gadget_with_pendants(petersen(), 0, 2),
    ], ids=['star', 'complete', 'path-hub-5', 'path-hub-100', 'prime-tree', 'petersen'])
    def test_stable_instances_pass(self, instance):
        for check in MAX_CHECKS:
            assert check(instance.spec, instance.profile, Verdict.STABLE).verdict is not CheckVerdict.FAIL
        for check in MAX_BUDGETED:
            assert check(instance.spec, instance.profile, Verdict.STABLE).verdict is not CheckVerdict.FAIL

    def test_gamma_bound_values(self):
        instance = path_hub(3, 100)
        result = verify_gamma_bound(instance.spec, instance.profile, Verdict.STABLE)
        assert result.verdict is CheckVerdict.PASS
        assert result.measured == {'social_cost': 205, 'gamma': 2}
        assert result.bound == 3 * 105

    def test_r2_envelope_on_prime_tree(self):
        instance = prime_tree(3)
        result = verify_r2_envelope(instance.spec, instance.profile, Verdict.STABLE)
        assert result.verdict is CheckVerdict.PASS
        assert result.measured['delta'] == 4
        assert result.measured['ratio'] == pytest.approx(61 / 22)

    def test_r2_envelope_needs_radius_two(self):
        instance = path_hub(3, 5)
        assert verify_r2_envelope(instance.spec, instance.profile, Verdict.STABLE).verdict is \
            CheckVerdict.NOT_APPLICABLE

    def test_failing_branches(self):
        # Star plus one extra leaf edge, every edge paid twice: not an equilibrium, SC = 11 > 2(n-1).
        instance = star(6)
        padded = instance.profile.with_strategy(0, [1, 2, 3, 4, 5]).with_strategy(1, [0, 2])
        centered = verify_self_centered_rule(instance.spec, padded, Verdict.STABLE)
        assert centered.verdict is CheckVerdict.FAIL
        assert centered.measured == {'social_cost': 11, 'self_centered': False}
        delta = verify_delta_bound(instance.spec, padded, Verdict.STABLE)
        assert delta.verdict is CheckVerdict.FAIL
        assert delta.measured == {'social_cost': 11, 'delta': 1}

    def test_gates(self):
        instance = star(6)
        assert verify_gamma_bound(instance.spec, instance.profile, Verdict.UNSTABLE).verdict is \
            CheckVerdict.NOT_APPLICABLE
        assert verify_gamma_bound(instance.spec, instance.profile, Verdict.UNKNOWN).verdict is CheckVerdict.SKIPPED
        assert verify_sum_slack_rule(instance.spec, instance.profile, Verdict.STABLE).verdict is \
            CheckVerdict.NOT_APPLICABLE
        pendant = nonuniform_clique_pendant(3)
        assert verify_delta_bound(pendant.spec, pendant.profile, Verdict.STABLE).verdict is \
            CheckVerdict.NOT_APPLICABLE

    def test_budget_exhaustion_skips(self):
        instance = prime_tree(3)
        result = verify_gamma_bound(instance.spec, instance.profile, Verdict.STABLE, SolverBudget(max_expansions=1))
        assert result.verdict is CheckVerdict.SKIPPED

    def test_ball_growth_rows(self):
        instance = gadget_with_pendants(petersen(), 0, 2)
        result = verify_ball_growth(instance.spec, instance.profile, Verdict.STABLE)
        assert result.verdict is CheckVerdict.PASS
        assert result.measured['gamma'] == 3
        assert [row['k'] for row in result.measured['balls']] == [1, 2]
        assert result.measured['balls'][0] == {'k': 1, 'beta_k': 4, 'beta_3k_plus_1': 10, 'needed': 10}


class TestSumChecks:

    @pytest.mark.parametrize("instance", [
        star(6, variant=Variant.SUM), multipartite_sum(8, 3), multipartite_sum(12, 3), ring_family(3, 2),
        ring_family(4, 3),
    ], ids=['star', 'multipartite-8-3', 'multipartite-12-3', 'ring-3-2', 'ring-4-3'])
    def test_stable_instances_pass(self, instance):
        for check in SUM_CHECKS:
            assert check(instance.spec, instance.profile, Verdict.STABLE).verdict is not CheckVerdict.FAIL

    def test_slack_rule_vacuous_without_slack(self):
        instance = star(6, variant=Variant.SUM)
        result = verify_sum_slack_rule(instance.spec, instance.profile, Verdict.STABLE)
        assert result.verdict is CheckVerdict.PASS
        assert result.measured['slack_nodes'] == 0

    def test_slack_rule_with_slack(self):
        instance = star(6, variant=Variant.SUM, bound=12)
        result = verify_sum_slack_rule(instance.spec, instance.profile, Verdict.STABLE)
        assert result.verdict is CheckVerdict.PASS
        assert result.measured == {'social_cost': 5, 'min_broadcast': 5, 'slack_nodes': 1}

    def test_pos_ratio(self):
        instance = multipartite_sum(8, 3)
        result = verify_pos_ratio(instance.spec, instance.profile, Verdict.STABLE)
        assert result.verdict is CheckVerdict.PASS
        assert result.bound == 32
        assert result.measured['optimum_kind'] == 'lower_bound'

    def test_sum_ball_growth_rho(self):
        instance = multipartite_sum(8, 3)
        result = verify_sum_ball_growth(instance.spec, instance.profile, Verdict.STABLE)
        assert result.measured['rho'] == pytest.approx(16 / 7)
        assert result.verdict is CheckVerdict.PASS


def test_domination_number_is_cached():
    graph = cycle(9)
    assert domination_number(graph, 1) == 3
    assert domination_number(graph, 1, SolverBudget(max_expansions=1)) == 3


def test_unverified_profile_is_not_checked():
    instance = star(6)
    for check in MAX_CHECKS + MAX_BUDGETED:
        result = check(instance.spec, instance.profile)
        assert result.verdict is CheckVerdict.NOT_APPLICABLE
        assert result.detail == "profile not verified"
