"""Random scenario generation: uniform positions in the arena, robots
heading along +x, target velocities drawn from the configured sets."""
import numpy as np

from .tracking_types import RobotState, Scenario, TargetBelief, TargetState


def buildRobots(spec, rng):
    robots = []
    for _ in range(spec.n_robots):
        x = rng.uniform(0.0, spec.arena[0])
        y = rng.uniform(0.0, spec.arena[1])
        robots.append(RobotState(x, y, 0.0))
    return robots


def buildTargets(spec, rng):
    targets = []
    for _ in range(spec.n_targets):
        y1 = rng.uniform(0.0, spec.arena[0])
        y2 = rng.uniform(0.0, spec.arena[1])
        nu = spec.target_nu[rng.integers(len(spec.target_nu))]
        omega = spec.target_omega[rng.integers(len(spec.target_omega))]
        targets.append(TargetState(y1, y2, nu, omega, spec.sigma_q))
    return targets


def buildBeliefs(spec, targets, rng):
    # Initial estimate: truth plus a Gaussian offset
    beliefs = []
    for target in targets:
        offset = rng.normal(0.0, spec.initial_mean_std, size=2)
        beliefs.append(TargetBelief(
            target.position + offset, spec.initial_cov_scale * np.eye(2)))
    return beliefs


def generate_scenario(spec, seed):
    rng = np.random.default_rng(seed)
    robots = buildRobots(spec, rng)
    targets = buildTargets(spec, rng)
    beliefs = buildBeliefs(spec, targets, rng)
    inputs = [spec.robotInputs() for _ in robots]
    return Scenario(robots, inputs, targets, beliefs, spec.sensor, spec.tau,
                    spec.arena, seed)
