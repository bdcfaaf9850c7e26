"""Tracking-quality set function and the team objective under attack.

Phi(S) is the reduction of the summed per-target posterior covariance
trace when the robots in S measure at their next-step states (or of the
summed log-determinants, or of the largest eigenvalues). Under a
communication attack the team splits into connected components and the
team value is that of the best component, without its sensing-attacked
robots.
"""
import functools

import networkx as nx
import numpy as np

from . import ekf
from . import models
from . import tracking_const
from .tracking_types import EvalCounter


@functools.lru_cache(maxsize=4096)
def _components(n, blocked):
    graph = nx.complete_graph(n)
    graph.remove_edges_from(blocked)
    return tuple(sorted(
        (frozenset(component) for component in nx.connected_components(graph)),
        key=min))


def connected_components(n, blocked=()):
    """Components of the complete graph on n robots minus `blocked` edges,
    ordered by smallest member."""
    pairs = frozenset(tuple(sorted(pair)) for pair in blocked)
    for i, j in pairs:
        if i == j or not (0 <= i < n and 0 <= j < n):
            raise ValueError('blocked edge {} outside the team'.format((i, j)))
    return [set(component) for component in _components(n, pairs)]


class TrackingObjective:
    """Phi oracle bound to one scenario.

    Predicted beliefs and per-(robot, input) measurement information are
    computed once; subset values are memoized by their (robot, input)
    pairs. Every call to phi() counts as one evaluation.
    """

    def __init__(self, scenario, kind=tracking_const.OBJECTIVE_TRACE, counter=None):
        if kind not in tracking_const.OBJECTIVES:
            raise ValueError('unknown objective {!r}'.format(kind))
        self.scenario = scenario
        self.kind = kind
        self.counter = counter if counter is not None else EvalCounter()
        self.predicted = [
            ekf.predict(belief, target, scenario.tau)
            for belief, target in zip(scenario.beliefs, scenario.targets)]
        self.priorCov = np.array([belief.cov for belief in self.predicted])
        self.priorInfo = ekf.inv2_batch(self.priorCov, 'prior covariance')
        self.priorTrace = np.trace(self.priorCov, axis1=1, axis2=2)
        self.priorLogdet = np.linalg.slogdet(self.priorCov)[1]
        self.priorMaxEig = np.linalg.eigvalsh(self.priorCov)[:, -1]
        self._info = {}
        self._values = {}

    def next_state(self, robot, index):
        return models.step_robot(
            self.scenario.robots[robot], self.scenario.control(robot, index),
            self.scenario.tau)

    def information(self, robot, index):
        """Stack of H^T R^-1 H, one per target, for a robot at its next state."""
        key = (robot, index)
        if key not in self._info:
            state = self.next_state(robot, index)
            self._info[key] = np.array([
                ekf.information(*ekf.linearized_contribution(
                    state, belief.mean, self.scenario.sensor))
                for belief in self.predicted])
        return self._info[key]

    def posterior_covs(self, pairs):
        info = np.zeros_like(self.priorInfo)
        for robot, index in pairs:
            info = info + self.information(robot, index)
        return ekf.inv2_batch(self.priorInfo + info, 'posterior information')

    def _evaluate(self, pairs):
        posterior = self.posterior_covs(pairs)
        if self.kind == tracking_const.OBJECTIVE_LOGDET:
            return float(np.sum(self.priorLogdet - np.linalg.slogdet(posterior)[1]))
        if self.kind == tracking_const.OBJECTIVE_MAXEIG:
            # worst-case error variance per target
            return float(np.sum(self.priorMaxEig - np.linalg.eigvalsh(posterior)[:, -1]))
        return float(np.sum(self.priorTrace - np.trace(posterior, axis1=1, axis2=2)))

    def phi_pairs(self, pairs):
        """Phi of an explicit set of (robot, input index) pairs."""
        self.counter.increment()
        key = tuple(sorted(pairs))
        if not key:
            return 0.0
        if key not in self._values:
            self._values[key] = self._evaluate(key)
        return self._values[key]

    def phi(self, assignment, contributing):
        return self.phi_pairs([(robot, assignment[robot]) for robot in contributing])

    def individual_best(self, robot):
        """(max over U_i of Phi({i}), argmax index); ties go to the smallest index."""
        bestValue, bestIndex = None, None
        for index in range(len(self.scenario.inputs[robot])):
            value = self.phi_pairs([(robot, index)])
            if bestValue is None or value > bestValue:
                bestValue, bestIndex = value, index
        return bestValue, bestIndex

    def team_phi_detail(self, assignment, attack):
        """(team value, winning component) under an attack realization."""
        components = connected_components(self.scenario.n_robots, attack.edges)
        bestValue, bestComponent = None, None
        for component in components:
            value = self.phi(assignment, sorted(component - attack.sensing))
            if bestValue is None or value > bestValue:
                bestValue, bestComponent = value, component
        return bestValue, bestComponent

    def team_phi(self, assignment, attack):
        return self.team_phi_detail(assignment, attack)[0]


def phi_subset(scenario, assignment, contributing, counter=None,
               kind=tracking_const.OBJECTIVE_TRACE):
    return TrackingObjective(scenario, kind, counter).phi(assignment, sorted(contributing))


def team_phi(scenario, assignment, attack, counter=None,
             kind=tracking_const.OBJECTIVE_TRACE):
    return TrackingObjective(scenario, kind, counter).team_phi(assignment, attack)
