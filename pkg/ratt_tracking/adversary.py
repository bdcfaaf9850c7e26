"""Attack oracles: exhaustive worst-case joint sensing/communication attack
and the bounded rational attacker used at large scale."""
import itertools
import logging
import math

from . import caa
from . import objective
from . import tracking_const
from .tracking_errors import BudgetExceeded, ScaleExceeded
from .tracking_types import AttackRealization

log = logging.getLogger(__name__)


def attack_runtime_budget(n_robots, alpha_s, alpha_c):
    """Number of exact-size attack realizations, C(N, a_s) * C(|E|, a_c)."""
    return math.comb(n_robots, alpha_s) * math.comb(caa.edge_count(n_robots), alpha_c)


def attack_count(n_robots, alpha_s, alpha_c, all_sizes=False):
    if not all_sizes:
        return attack_runtime_budget(n_robots, alpha_s, alpha_c)
    return sum(attack_runtime_budget(n_robots, s, c)
               for s in range(alpha_s + 1) for c in range(alpha_c + 1))


def check_budgets(n_robots, alpha_s, alpha_c):
    if alpha_s < 0 or alpha_c < 0:
        raise ValueError('attack budgets must be non-negative')
    if alpha_s > n_robots:
        raise BudgetExceeded('{} sensing attacks on {} robots'.format(alpha_s, n_robots))
    if alpha_c > caa.edge_count(n_robots):
        raise BudgetExceeded('{} communication attacks on {} edges'.format(
            alpha_c, caa.edge_count(n_robots)))


def enumerate_attacks(n_robots, alpha_s, alpha_c, all_sizes=False):
    """Attack realizations in lexicographic (sensing, edges) order. With
    all_sizes, every smaller budget is swept too, smallest sizes first."""
    robots = range(n_robots)
    edges = list(itertools.combinations(robots, 2))
    sensingSizes = range(alpha_s + 1) if all_sizes else (alpha_s,)
    edgeSizes = range(alpha_c + 1) if all_sizes else (alpha_c,)
    for sensingSize in sensingSizes:
        for sensing in itertools.combinations(robots, sensingSize):
            for edgeSize in edgeSizes:
                for blocked in itertools.combinations(edges, edgeSize):
                    yield AttackRealization(sensing, blocked)


def contributing_family(n_robots, attack):
    """Robot subsets whose measurements can fuse under an attack: each
    component minus its sensing-attacked robots."""
    return frozenset(
        tuple(sorted(component - attack.sensing))
        for component in objective.connected_components(n_robots, attack.edges))


def attack_families(n_robots, alpha_s, alpha_c, all_sizes=False):
    """Distinct contributing families, each with the first attack producing it."""
    seen = {}
    for attack in enumerate_attacks(n_robots, alpha_s, alpha_c, all_sizes):
        family = contributing_family(n_robots, attack)
        if family not in seen:
            seen[family] = attack
    return [(attack, sorted(family)) for family, attack in seen.items()]


def family_value(tracker, assignment, family):
    return max(tracker.phi(assignment, subset) for subset in family)


def worst_case_attack(scenario, assignment, alpha_s, alpha_c, tracker=None,
                      cap=tracking_const.CAP_EVALS, all_sizes=False, families=None):
    """Exact minimizer of the team objective over budget-feasible attacks;
    ties go to the lexicographically smallest realization."""
    n = scenario.n_robots
    check_budgets(n, alpha_s, alpha_c)
    needed = attack_count(n, alpha_s, alpha_c, all_sizes)
    if needed > cap:
        raise ScaleExceeded(needed, cap)
    if tracker is None:
        tracker = objective.TrackingObjective(scenario)
    if families is None:
        families = attack_families(n, alpha_s, alpha_c, all_sizes)
    bestAttack, bestValue = None, None
    for attack, family in families:
        value = family_value(tracker, assignment, family)
        if bestValue is None or value < bestValue:
            bestAttack, bestValue = attack, value
    return bestAttack, bestValue


def rank_robots(tracker, assignment, rank_by=tracking_const.RANK_ASSIGNED):
    """Robots by decreasing individual tracking quality, smallest id on ties."""
    robots = tracker.scenario.robot_ids
    if rank_by == tracking_const.RANK_SOLO:
        quality = {robot: tracker.individual_best(robot)[0] for robot in robots}
    elif rank_by == tracking_const.RANK_ASSIGNED:
        quality = {robot: tracker.phi(assignment, [robot]) for robot in robots}
    else:
        raise ValueError('unknown ranking {!r}'.format(rank_by))
    return sorted(robots, key=lambda robot: (-quality[robot], robot))


def bounded_rational_attack(scenario, assignment, alpha_s, alpha_c, tracker=None,
                            rank_by=tracking_const.RANK_ASSIGNED):
    """Remove sensing from the top alpha_s robots, then isolate the next
    alpha_cs = CAA(N, alpha_c) robots by blocking all their edges.

    The number of blocked edges follows from the isolation and is not held
    to alpha_c.
    """
    n = scenario.n_robots
    check_budgets(n, alpha_s, alpha_c)
    if tracker is None:
        tracker = objective.TrackingObjective(scenario)
    alpha_cs = caa.caa(n, alpha_c).alpha_cs
    order = rank_robots(tracker, assignment, rank_by)
    sensing = order[:min(alpha_s, n)]
    isolated = order[len(sensing):len(sensing) + alpha_cs]
    blocked = {(min(i, j), max(i, j))
               for i in isolated for j in range(n) if i != j}
    attack = AttackRealization(sensing, blocked)
    log.debug('bounded-rational attack: sensing %s, isolated %s, %d edges',
              sorted(sensing), sorted(isolated), len(attack.edges))
    return attack
