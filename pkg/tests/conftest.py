import numpy as np
import pytest

from ratt_tracking import mock_scenario
from ratt_tracking.objective import TrackingObjective
from ratt_tracking.tracking_types import (
    Assignment,
    ControlInput,
    GeneratorSpec,
    RobotState,
    Scenario,
    TargetBelief,
    TargetState,
)

FOUR_INPUTS = dict(robot_nu=(1.0, 3.0), robot_omega=(0.0, 1.0))


def random_scenario(n_robots, n_targets, seed, arena=(100.0, 100.0), **overrides):
    spec = GeneratorSpec(n_robots, n_targets, arena=arena, **overrides)
    return mock_scenario.generate_scenario(spec, seed)


def small_scenario(n_robots, n_targets, seed, **overrides):
    """Random instance with four inputs per robot in a 40 m arena."""
    options = dict(FOUR_INPUTS)
    options.update(overrides)
    return random_scenario(n_robots, n_targets, seed, arena=(40.0, 40.0), **options)


def random_assignment(scenario, rng):
    return Assignment({robot: int(rng.integers(len(scenario.inputs[robot])))
                       for robot in scenario.robot_ids})


def hand_scenario(inputs_per_robot=2):
    """Two robots, one target, two inputs each."""
    robots = [RobotState(0.0, 0.0, 0.0), RobotState(20.0, 0.0, np.pi / 2)]
    choices = [ControlInput(1.0, 0.0), ControlInput(3.0, 1.0)][:inputs_per_robot]
    targets = [TargetState(10.0, 10.0, 5.0 / 3, 1.0 / 20, 0.5)]
    beliefs = [TargetBelief((11.0, 9.0), 4.0 * np.eye(2))]
    return Scenario(robots, [choices, list(choices)], targets, beliefs)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def scenario3():
    return small_scenario(3, 2, seed=3)


@pytest.fixture
def scenario4():
    return small_scenario(4, 2, seed=4)


@pytest.fixture
def tracker4(scenario4):
    return TrackingObjective(scenario4)


CAMPAIGN_YAML = """\
schema_version: 1
seed: 5
trials: 2
planners: [ratt, greedy]
attack_modes: [worst-case]
budgets:
  - [1, 1]
generator:
  robots: 3
  targets: 2
  arena: [40, 40]
  robot_nu: [1, 3]
  robot_omega: [0, 1]
"""


@pytest.fixture
def campaign_file(tmp_path, monkeypatch):
    monkeypatch.delenv('RATT_OUTPUT_DIR', raising=False)
    path = tmp_path / 'campaign.yaml'
    path.write_text(CAMPAIGN_YAML)
    return path
