"""RATT and the comparison planners (OPT, NR-OPT, Greedy, Random)."""
import itertools
import logging
import math

from . import adversary
from . import caa
from . import objective
from . import tracking_const
from .tracking_errors import ScaleExceeded
from .tracking_types import Assignment, EvalCounter, PlanResult

log = logging.getLogger(__name__)


def _tracker(scenario, tracker):
    return tracker if tracker is not None else objective.TrackingObjective(scenario)


def _greedy(tracker, robots, base=(), base_value=0.0):
    """Standard greedy over (robot, input) pairs: each round adds the pair
    with the largest marginal gain on top of `base` and the pairs chosen so
    far. Ties go to the smallest robot id, then the smallest input index.
    Returns the chosen pairs in selection order."""
    remaining = sorted(robots)
    chosen = []
    current = base_value
    inputs = tracker.scenario.inputs
    while remaining:
        best = None
        for robot in remaining:
            for index in range(len(inputs[robot])):
                value = tracker.phi_pairs(list(base) + chosen + [(robot, index)])
                gain = value - current
                if best is None or gain > best[0]:
                    best = (gain, value, robot, index)
        _, current, robot, index = best
        chosen.append((robot, index))
        remaining.remove(robot)
        log.debug('greedy picks robot %d input %d (value %.6g)', robot, index, current)
    return chosen


def plan_ratt(scenario, alpha_s, alpha_c, tracker=None, condition_on_baits=False):
    n = scenario.n_robots
    adversary.check_budgets(n, alpha_s, alpha_c)
    tracker = _tracker(scenario, tracker)
    start = tracker.counter.count
    alpha = alpha_s + caa.caa(n, alpha_c).alpha_cs
    best = {robot: tracker.individual_best(robot) for robot in scenario.robot_ids}
    if alpha >= n:
        choice = {robot: best[robot][1] for robot in scenario.robot_ids}
        return PlanResult(Assignment(choice), scenario.robot_ids, [], alpha,
                          EvalCounter(tracker.counter.count - start))

    ranked = sorted(scenario.robot_ids, key=lambda robot: (-best[robot][0], robot))
    baits = ranked[:alpha]
    choice = {robot: best[robot][1] for robot in baits}
    base, baseValue = [], 0.0
    if condition_on_baits and baits:
        base = sorted(choice.items())
        baseValue = tracker.phi_pairs(base)
    picked = _greedy(tracker, ranked[alpha:], base, baseValue)
    choice.update(picked)
    return PlanResult(Assignment(choice), baits, [robot for robot, _ in picked],
                      alpha, EvalCounter(tracker.counter.count - start))


def plan_greedy(scenario, tracker=None):
    tracker = _tracker(scenario, tracker)
    return Assignment(_greedy(tracker, scenario.robot_ids))


def plan_random(scenario, rng):
    return Assignment({robot: int(rng.integers(len(scenario.inputs[robot])))
                       for robot in scenario.robot_ids})


def product_size(scenario):
    return math.prod(len(robotInputs) for robotInputs in scenario.inputs)


def _assignments(scenario):
    ranges = [range(len(robotInputs)) for robotInputs in scenario.inputs]
    for indices in itertools.product(*ranges):
        yield Assignment(dict(enumerate(indices)))


def nropt_search(scenario, tracker=None, cap=tracking_const.CAP_EVALS):
    """(assignment, value) maximizing the unattacked Phi(V)."""
    needed = product_size(scenario)
    if needed > cap:
        raise ScaleExceeded(needed, cap)
    tracker = _tracker(scenario, tracker)
    team = scenario.robot_ids
    bestAssignment, bestValue = None, None
    for assignment in _assignments(scenario):
        value = tracker.phi(assignment, team)
        if bestValue is None or value > bestValue:
            bestAssignment, bestValue = assignment, value
    return bestAssignment, bestValue


def plan_nropt(scenario, tracker=None, cap=tracking_const.CAP_EVALS):
    return nropt_search(scenario, tracker, cap)[0]


def opt_search(scenario, alpha_s, alpha_c, tracker=None,
               cap=tracking_const.CAP_EVALS, all_sizes=False):
    """(assignment, value) maximizing the worst-case team objective.

    Assignments are visited in lexicographic input-index order; an
    assignment whose running minimum falls to the incumbent value is
    abandoned, which keeps the first maximizer."""
    n = scenario.n_robots
    adversary.check_budgets(n, alpha_s, alpha_c)
    needed = product_size(scenario) * adversary.attack_count(n, alpha_s, alpha_c, all_sizes)
    if needed > cap:
        raise ScaleExceeded(needed, cap)
    tracker = _tracker(scenario, tracker)
    families = [family for _, family in
                adversary.attack_families(n, alpha_s, alpha_c, all_sizes)]
    log.debug('opt: %d assignments x %d attack families', product_size(scenario), len(families))
    bestAssignment, bestValue = None, None
    for assignment in _assignments(scenario):
        worst = None
        for family in families:
            value = adversary.family_value(tracker, assignment, family)
            if worst is None or value < worst:
                worst = value
                if bestValue is not None and worst <= bestValue:
                    break
        if bestValue is None or worst > bestValue:
            bestAssignment, bestValue = assignment, worst
    return bestAssignment, bestValue


def plan_opt(scenario, alpha_s, alpha_c, tracker=None,
             cap=tracking_const.CAP_EVALS, all_sizes=False):
    return opt_search(scenario, alpha_s, alpha_c, tracker, cap, all_sizes)[0]


def plan(name, scenario, alpha_s, alpha_c, tracker=None, rng=None,
         cap=tracking_const.CAP_EVALS, condition_on_baits=False):
    """Run a planner by name and wrap the outcome in a PlanResult."""
    tracker = _tracker(scenario, tracker)
    if name == tracking_const.PLANNER_RATT:
        return plan_ratt(scenario, alpha_s, alpha_c, tracker, condition_on_baits)
    start = tracker.counter.count
    if name == tracking_const.PLANNER_OPT:
        assignment = plan_opt(scenario, alpha_s, alpha_c, tracker, cap)
    elif name == tracking_const.PLANNER_NROPT:
        assignment = plan_nropt(scenario, tracker, cap)
    elif name == tracking_const.PLANNER_GREEDY:
        assignment = plan_greedy(scenario, tracker)
    elif name == tracking_const.PLANNER_RANDOM:
        if rng is None:
            raise ValueError('the random planner needs a generator')
        assignment = plan_random(scenario, rng)
    else:
        raise ValueError('unknown planner {!r}'.format(name))
    return PlanResult(assignment, (), sorted(assignment.choice), 0,
                      EvalCounter(tracker.counter.count - start))
