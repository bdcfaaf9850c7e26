import itertools

import numpy as np
import pytest

from ratt_tracking import adversary
from ratt_tracking import planner
from ratt_tracking import tracking_const
from ratt_tracking.objective import TrackingObjective
from ratt_tracking.tracking_errors import BudgetExceeded, ScaleExceeded
from ratt_tracking.tracking_types import Assignment, AttackRealization

from conftest import random_assignment, random_scenario, small_scenario


@pytest.mark.parametrize('args, expected', [
    ((4, 1, 3), 80),
    ((7, 0, 0), 1),
    ((10, 2, 3), 45 * 14190),
])
def test_runtime_budget(args, expected):
    assert adversary.attack_runtime_budget(*args) == expected


def test_attack_count_all_sizes():
    assert adversary.attack_count(3, 1, 1, all_sizes=True) == 1 + 3 + 3 + 9


def test_enumeration_order():
    attacks = list(adversary.enumerate_attacks(3, 1, 1))
    assert len(attacks) == 9
    assert attacks[0] == AttackRealization((0,), [(0, 1)])
    assert [a.sortKey() for a in attacks] == sorted(a.sortKey() for a in attacks)


def test_no_attack(scenario4):
    assignment = Assignment({robot: 1 for robot in scenario4.robot_ids})
    attack, value = adversary.worst_case_attack(scenario4, assignment, 0, 0)
    assert attack == AttackRealization()
    assert value == TrackingObjective(scenario4).phi(assignment, [0, 1, 2, 3])


def test_everyone_attacked(scenario4):
    assignment = Assignment({robot: 0 for robot in scenario4.robot_ids})
    attack, value = adversary.worst_case_attack(scenario4, assignment, 4, 0)
    assert attack.sensing == frozenset(scenario4.robot_ids)
    assert value == 0.0


def test_nested_loop_oracle(scenario3, rng):
    edges = scenario3.edges()
    for _ in range(10):
        assignment = random_assignment(scenario3, rng)
        for alpha_s, alpha_c in ((1, 1), (0, 2), (2, 1), (1, 3)):
            expectedAttack, expectedValue = None, None
            for sensing in itertools.combinations(range(3), alpha_s):
                for blocked in itertools.combinations(edges, alpha_c):
                    attack = AttackRealization(sensing, blocked)
                    value = TrackingObjective(scenario3).team_phi(assignment, attack)
                    if expectedValue is None or value < expectedValue:
                        expectedAttack, expectedValue = attack, value
            attack, value = adversary.worst_case_attack(scenario3, assignment, alpha_s, alpha_c)
            assert value == pytest.approx(expectedValue, rel=1e-12, abs=1e-15)
            assert attack == expectedAttack


def test_sampled_attacks_never_beat_worst_case(scenario4, rng):
    tracker = TrackingObjective(scenario4)
    assignment = random_assignment(scenario4, rng)
    _, worst = adversary.worst_case_attack(scenario4, assignment, 1, 3, tracker)
    edges = scenario4.edges()
    for _ in range(1000):
        sensing = rng.choice(4, size=1, replace=False).tolist()
        blocked = [edges[i] for i in rng.choice(len(edges), size=3, replace=False)]
        value = tracker.team_phi(assignment, AttackRealization(sensing, blocked))
        assert value >= worst


def test_worst_case_scale(scenario4):
    assignment = Assignment({robot: 0 for robot in scenario4.robot_ids})
    with pytest.raises(ScaleExceeded):
        adversary.worst_case_attack(scenario4, assignment, 1, 3, cap=79)


def test_budget_errors(scenario4):
    assignment = Assignment({robot: 0 for robot in scenario4.robot_ids})
    with pytest.raises(BudgetExceeded):
        adversary.worst_case_attack(scenario4, assignment, 5, 0)
    with pytest.raises(BudgetExceeded):
        adversary.bounded_rational_attack(scenario4, assignment, 0, 7)


def test_bounded_no_attack(scenario4):
    assignment = Assignment({robot: 0 for robot in scenario4.robot_ids})
    assert adversary.bounded_rational_attack(scenario4, assignment, 0, 0) == AttackRealization()


@pytest.mark.parametrize('rank_by', [tracking_const.RANK_ASSIGNED, tracking_const.RANK_SOLO])
def test_bounded_forced_top(rank_by):
    scenario = small_scenario(2, 2, seed=17)
    tracker = TrackingObjective(scenario)
    assignment = Assignment({0: 1, 1: 2})
    if rank_by == tracking_const.RANK_SOLO:
        quality = [tracker.individual_best(robot)[0] for robot in (0, 1)]
    else:
        quality = [tracker.phi(assignment, [robot]) for robot in (0, 1)]
    top = 0 if quality[0] >= quality[1] else 1
    attack = adversary.bounded_rational_attack(scenario, assignment, 1, 0, rank_by=rank_by)
    assert attack == AttackRealization((top,), ())


def test_bounded_isolates_next_robots(scenario4):
    tracker = TrackingObjective(scenario4)
    assignment = Assignment({0: 0, 1: 1, 2: 2, 3: 3})
    order = adversary.rank_robots(tracker, assignment)
    attack = adversary.bounded_rational_attack(scenario4, assignment, 1, 3, tracker)
    assert attack.sensing == {order[0]}
    isolated = order[1]
    assert attack.edges == {tuple(sorted((isolated, j))) for j in range(4) if j != isolated}


def test_bounded_antitone_large():
    scenario = random_scenario(10, 15, seed=10)
    tracker = TrackingObjective(scenario)
    assignment = planner.plan_ratt(scenario, 3, 11, tracker).assignment
    attack = adversary.bounded_rational_attack(scenario, assignment, 3, 11, tracker)
    assert len(attack.sensing) == 3
    assert tracker.team_phi(assignment, attack) <= tracker.team_phi(assignment, AttackRealization())


def test_worst_case_below_bounded_and_size_free():
    rng = np.random.default_rng(99)
    for seed in range(30):
        scenario = small_scenario(4, 2, seed=1000 + seed)
        tracker = TrackingObjective(scenario)
        for assignment in (planner.plan_ratt(scenario, 1, 3, tracker).assignment,
                           random_assignment(scenario, rng)):
            _, worst = adversary.worst_case_attack(scenario, assignment, 1, 3, tracker)
            bounded = adversary.bounded_rational_attack(scenario, assignment, 1, 3, tracker)
            assert worst <= tracker.team_phi(assignment, bounded)
            _, anySize = adversary.worst_case_attack(
                scenario, assignment, 1, 3, tracker, all_sizes=True)
            assert anySize == worst


def test_families_deduplicate():
    families = adversary.attack_families(4, 1, 3)
    assert len(families) < adversary.attack_runtime_budget(4, 1, 3)
    first, _ = families[0]
    assert first == next(adversary.enumerate_attacks(4, 1, 3))


def test_realization_check():
    attack = AttackRealization((0, 2), [(3, 1)])
    assert attack.edges == {(1, 3)}
    attack.check(4, alpha_s=2, alpha_c=1)
    with pytest.raises(ValueError):
        attack.check(4, alpha_s=1)
    with pytest.raises(ValueError):
        attack.check(3)
    with pytest.raises(ValueError):
        AttackRealization((), [(2, 2)])
