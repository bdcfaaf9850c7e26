"""Curvature and total curvature of set functions by exhaustive
enumeration, and certification of the RATT approximation bounds."""
import itertools
import logging

from . import adversary
from . import caa
from . import objective
from . import planner
from . import tracking_const
from .tracking_errors import NotMonotone, NotSubmodular, ScaleExceeded, ZeroSingleton
from .tracking_types import BoundCertificate

log = logging.getLogger(__name__)

TOL = tracking_const.MARGINAL_TOL


class SetFunctionOracle:
    """A normalized set function over `ground`, memoized by subset."""

    def __init__(self, ground, evaluate):
        self.ground = list(ground)
        self.evaluate = evaluate
        self._cache = {}

    def __call__(self, subset):
        key = frozenset(subset)
        if key not in self._cache:
            self._cache[key] = 0.0 if not key else float(self.evaluate(key))
        return self._cache[key]

    def marginal(self, element, subset):
        subset = frozenset(subset)
        return self(subset | {element}) - self(subset)

    def subsets(self, elements=None):
        elements = self.ground if elements is None else list(elements)
        for size in range(len(elements) + 1):
            for combo in itertools.combinations(elements, size):
                yield frozenset(combo)


def _check_scale(f, cap):
    if len(f.ground) > cap:
        raise ScaleExceeded(2 ** len(f.ground), 2 ** cap)


def check_monotone(f):
    for element in f.ground:
        rest = [other for other in f.ground if other != element]
        for subset in f.subsets(rest):
            gain = f.marginal(element, subset)
            if gain < -TOL:
                raise NotMonotone('adding {!r} to {} loses {:.3g}'.format(
                    element, sorted(subset), -gain))


def check_submodular(f):
    """Diminishing returns on every (S, S + y) pair."""
    for x, y in itertools.permutations(f.ground, 2):
        rest = [other for other in f.ground if other not in (x, y)]
        for subset in f.subsets(rest):
            if f.marginal(x, subset) < f.marginal(x, subset | {y}) - TOL:
                raise NotSubmodular('marginal of {!r} grows when {!r} joins {}'.format(
                    x, y, sorted(subset)))


def total_curvature(f, cap=tracking_const.CURVATURE_CAP):
    """1 - min over x and Y, Y' not containing x of m(x|Y) / m(x|Y').

    Pairs with a vanishing denominator are skipped; an element whose
    marginals all vanish contributes ratio 1.
    """
    _check_scale(f, cap)
    check_monotone(f)
    worst = 1.0
    for element in f.ground:
        rest = [other for other in f.ground if other != element]
        gains = [f.marginal(element, subset) for subset in f.subsets(rest)]
        largest = max(gains)
        if largest <= TOL:
            continue
        worst = min(worst, max(min(gains), 0.0) / largest)
    return min(max(1.0 - worst, 0.0), 1.0)


def curvature(f, cap=tracking_const.CURVATURE_CAP):
    """1 - min over x of (f(X) - f(X - x)) / f({x}), for non-decreasing
    submodular f with non-zero singletons."""
    _check_scale(f, cap)
    check_monotone(f)
    check_submodular(f)
    everything = frozenset(f.ground)
    worst = 1.0
    for element in f.ground:
        single = f({element})
        if abs(single) <= TOL:
            raise ZeroSingleton('f({{{!r}}}) is zero'.format(element))
        last = f(everything) - f(everything - {element})
        worst = min(worst, max(last, 0.0) / single)
    return min(max(1.0 - worst, 0.0), 1.0)


def theorem1_bound(c_phi, alpha_cs):
    if alpha_cs == 0:
        return (1.0 - c_phi) ** 3
    return min((1.0 - c_phi) ** 3, (1.0 - c_phi) ** 2 / alpha_cs)


def submodular_bound(k_phi, alpha_cs):
    if alpha_cs == 0:
        return (1.0 - k_phi) / (1.0 + k_phi)
    return min((1.0 - k_phi) / (1.0 + k_phi), (1.0 - k_phi) / alpha_cs)


def certificate(achieved, optimal, oracle, alpha_cs, cap=tracking_const.CURVATURE_CAP):
    """Certificate comparing an achieved value with the optimum, using the
    curvatures of `oracle`. A zero optimum gives ratio 1."""
    ratio = 1.0 if optimal <= TOL else achieved / optimal
    c_phi = total_curvature(oracle, cap)
    k_phi = k_bound = None
    try:
        k_phi = curvature(oracle, cap)
        k_bound = submodular_bound(k_phi, alpha_cs)
    except (NotSubmodular, ZeroSingleton) as error:
        log.debug('no curvature bound: %s', error)
    return BoundCertificate(ratio, theorem1_bound(c_phi, alpha_cs), c_phi, k_phi,
                            k_bound, alpha_cs, achieved, optimal)


def certify_theorem1(scenario, alpha_s, alpha_c, cap=tracking_const.CAP_EVALS,
                     curvature_cap=tracking_const.CURVATURE_CAP, tracker=None,
                     condition_on_baits=False):
    """Worst-case value of RATT against OPT, checked against the bound
    computed from the Phi oracle over robot subsets at RATT's inputs."""
    if tracker is None:
        tracker = objective.TrackingObjective(scenario)
    alpha_cs = caa.caa(scenario.n_robots, alpha_c).alpha_cs
    ratt = planner.plan_ratt(scenario, alpha_s, alpha_c, tracker, condition_on_baits)
    _, achieved = adversary.worst_case_attack(
        scenario, ratt.assignment, alpha_s, alpha_c, tracker, cap)
    _, optimal = planner.opt_search(scenario, alpha_s, alpha_c, tracker, cap)
    oracle = SetFunctionOracle(
        scenario.robot_ids, lambda subset: tracker.phi(ratt.assignment, sorted(subset)))
    result = certificate(achieved, optimal, oracle, alpha_cs, curvature_cap)
    log.info('certificate: ratio %.6g, bound %.6g, c_phi %.6g -> %s',
             result.ratio, result.bound, result.c_phi,
             'satisfied' if result.satisfied else 'VIOLATED')
    return result
