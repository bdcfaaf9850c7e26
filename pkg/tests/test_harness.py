import csv

import numpy as np
import pytest
from scipy import stats

from ratt_tracking import experiment
from ratt_tracking import mock_scenario
from ratt_tracking import objective
from ratt_tracking import planner
from ratt_tracking import read_config
from ratt_tracking import tracking_const
from ratt_tracking.tracking_errors import ConfigInvalid
from ratt_tracking.tracking_types import GeneratorSpec, RobotState, Scenario

from conftest import CAMPAIGN_YAML, hand_scenario


def data_rows(path):
    with open(path, encoding='utf-8') as file:
        lines = [line for line in file.read().splitlines() if not line.startswith('#')]
    return list(csv.DictReader(lines))


def test_generator_input_sets():
    scenario = mock_scenario.generate_scenario(GeneratorSpec(4, 3), seed=1)
    assert [len(inputs) for inputs in scenario.inputs] == [12] * 4
    assert all(robot.theta == 0.0 for robot in scenario.robots)
    for belief in scenario.beliefs:
        np.testing.assert_array_equal(belief.cov, 4.0 * np.eye(2))


def test_generator_reproducible():
    spec = GeneratorSpec(5, 4)
    assert mock_scenario.generate_scenario(spec, 8) == mock_scenario.generate_scenario(spec, 8)
    assert mock_scenario.generate_scenario(spec, 8) != mock_scenario.generate_scenario(spec, 9)


def test_generator_target_velocities():
    scenario = mock_scenario.generate_scenario(GeneratorSpec(1, 50), seed=4)
    for target in scenario.targets:
        assert target.nu in tracking_const.TARGET_NU
        assert target.omega in tracking_const.TARGET_OMEGA


def test_generator_uniform_positions():
    spec = GeneratorSpec(10000, 1)
    scenario = mock_scenario.generate_scenario(spec, seed=77)
    xs = np.array([robot.x for robot in scenario.robots])
    ys = np.array([robot.y for robot in scenario.robots])
    assert xs.min() >= 0 and xs.max() <= 100 and ys.min() >= 0 and ys.max() <= 100
    for values in (xs, ys):
        counts, _ = np.histogram(values, bins=10, range=(0, 100))
        assert stats.chisquare(counts).pvalue > 1e-4


def test_scenario_positions_inside_arena():
    base = hand_scenario()
    corners = [RobotState(0.0, 0.0, 0.0), RobotState(100.0, 100.0, 0.0)]
    Scenario(corners, base.inputs, base.targets, base.beliefs)
    with pytest.raises(ValueError):
        Scenario(base.robots, base.inputs, base.targets, base.beliefs, arena=(15.0, 15.0))
    outside = [RobotState(-0.5, 3.0, 0.0), base.robots[1]]
    with pytest.raises(ValueError):
        Scenario(outside, base.inputs, base.targets, base.beliefs)


def test_trial_seeds_depend_only_on_trial():
    first, noise = experiment.trial_seeds(3, 7)
    again, noiseAgain = experiment.trial_seeds(3, 7)
    assert first == again
    assert np.random.default_rng(noise).random() == np.random.default_rng(noiseAgain).random()
    assert experiment.trial_seeds(3, 8)[0] != first


def test_unattacked_trial(scenario4):
    record = experiment.run_trial(
        scenario4, 'ratt', 'none', 0, 0, np.random.default_rng(1))
    assignment = planner.plan_ratt(scenario4, 0, 0).assignment
    assert record.phi == objective.phi_subset(scenario4, assignment, set(scenario4.robot_ids))
    assert record.blocked_edges == 0
    assert record.alpha_cs == 0
    assert record.avg_trace > 0 and record.mse >= 0


def test_avg_trace_tracks_phi(scenario4):
    record = experiment.run_trial(
        scenario4, 'greedy', 'worst-case', 1, 3, np.random.default_rng(2))
    tracker = objective.TrackingObjective(scenario4)
    prior = float(np.sum(tracker.priorTrace))
    assert record.avg_trace == pytest.approx((prior - record.phi) / scenario4.n_targets)


def test_shared_noise_across_planners(scenario4):
    ratt = experiment.run_trial(scenario4, 'ratt', 'worst-case', 0, 0, np.random.default_rng(3))
    greedy = experiment.run_trial(scenario4, 'greedy', 'worst-case', 0, 0, np.random.default_rng(3))
    assert (ratt.avg_trace, ratt.mse, ratt.phi) == (greedy.avg_trace, greedy.mse, greedy.phi)


def test_single_sample_keeps_noise_stream(scenario4):
    noise = experiment.TrialNoise.draw(scenario4, np.random.default_rng(8))
    rng = np.random.default_rng(8)
    np.testing.assert_array_equal(noise.process[0], rng.standard_normal((2, 2)))
    np.testing.assert_array_equal(noise.measurement[0], rng.standard_normal((4, 2, 2)))
    assert noise.samples == 1 and noise.start is None
    assert noise.initial_targets(scenario4, 0) is scenario4.targets


def test_samples_redraw_start_from_belief(scenario4):
    noise = experiment.TrialNoise.draw(scenario4, np.random.default_rng(8), 3)
    assert noise.samples == 3
    assert noise.measurement.shape == (3, 4, 2, 2)
    for k in range(3):
        targets = noise.initial_targets(scenario4, k)
        for j, (target, belief) in enumerate(zip(targets, scenario4.beliefs)):
            expected = belief.mean + np.linalg.cholesky(belief.cov) @ noise.start[k, j]
            np.testing.assert_allclose(target.position, expected)
            assert target.nu == scenario4.targets[j].nu
    with pytest.raises(ValueError):
        experiment.TrialNoise.draw(scenario4, np.random.default_rng(8), 0)


def test_mse_averages_samples(scenario4):
    record = experiment.run_trial(
        scenario4, 'greedy', 'none', 0, 0, np.random.default_rng(9), mse_samples=5)
    noise = experiment.TrialNoise.draw(scenario4, np.random.default_rng(9), 5)
    tracker = objective.TrackingObjective(scenario4)
    assignment = planner.plan_greedy(scenario4)
    covs, means, truth = experiment.estimate(tracker, assignment, scenario4.robot_ids, noise)
    assert means.shape == truth.shape == (5, 2, 2)
    errors = np.sum((means - truth) ** 2, axis=-1)
    assert record.mse == pytest.approx(float(np.mean(errors)))
    # every sample starts from its own true position
    assert not np.allclose(truth[0], truth[1])


def test_opt_at_least_ratt(scenario4):
    opt = experiment.run_trial(scenario4, 'opt', 'worst-case', 1, 3, np.random.default_rng(4))
    ratt = experiment.run_trial(scenario4, 'ratt', 'worst-case', 1, 3, np.random.default_rng(4))
    assert opt.phi >= ratt.phi - 1e-12
    assert opt.avg_trace <= ratt.avg_trace + 1e-12


def test_bounded_trial_counts_edges(scenario4):
    record = experiment.run_trial(
        scenario4, 'ratt', 'bounded-rational', 1, 3, np.random.default_rng(5))
    assert record.blocked_edges == 3
    assert record.alpha_cs == 1


def test_unknown_attack_mode(scenario4):
    with pytest.raises(ValueError):
        experiment.run_trial(scenario4, 'ratt', 'jamming', 0, 0, np.random.default_rng(6))


def test_campaign_rows(campaign_file, tmp_path):
    output = tmp_path / 'out' / 'campaign.csv'
    experiment.run_campaign(str(campaign_file), str(output))
    rows = data_rows(output)
    trials = [row for row in rows if row['row_type'] == 'trial']
    assert len(trials) == 4
    assert {row['planner'] for row in trials} == {'ratt', 'greedy'}
    assert sorted(row['row_type'] for row in rows if row['row_type'] != 'trial') == \
        ['mean', 'mean', 'std', 'std']
    assert 'wall_time' not in rows[0]
    with open(output, encoding='utf-8') as file:
        head = file.readline()
    assert head == '# schema_version=1\n'


def test_campaign_empty_planners(tmp_path, monkeypatch):
    monkeypatch.delenv('RATT_OUTPUT_DIR', raising=False)
    path = tmp_path / 'bad.yaml'
    path.write_text(CAMPAIGN_YAML.replace('[ratt, greedy]', '[]'))
    with pytest.raises(ConfigInvalid):
        experiment.run_campaign(str(path), str(tmp_path / 'campaign.csv'))


def test_campaign_byte_identical(campaign_file, tmp_path):
    first = tmp_path / 'first.csv'
    second = tmp_path / 'second.csv'
    experiment.run_campaign(str(campaign_file), str(first))
    experiment.run_campaign(str(campaign_file), str(second))
    assert first.read_bytes() == second.read_bytes()


def test_campaign_parallel_matches_serial(campaign_file, tmp_path):
    serial = tmp_path / 'serial.csv'
    parallel = tmp_path / 'parallel.csv'
    experiment.run_campaign(str(campaign_file), str(serial), jobs=1)
    experiment.run_campaign(str(campaign_file), str(parallel), jobs=2)
    assert serial.read_bytes() == parallel.read_bytes()


def test_campaign_seed_override(campaign_file, tmp_path):
    base = tmp_path / 'base.csv'
    other = tmp_path / 'other.csv'
    experiment.run_campaign(str(campaign_file), str(base))
    experiment.run_campaign(str(campaign_file), str(other), seed=6)
    assert base.read_bytes() != other.read_bytes()
    assert '# seed=6' in other.read_text()


def test_campaign_wall_time_column(tmp_path, monkeypatch):
    monkeypatch.delenv('RATT_OUTPUT_DIR', raising=False)
    config = read_config.parse_config(CAMPAIGN_YAML + 'report:\n  wall_time: true\n')
    output = tmp_path / 'timed.csv'
    experiment.run_config(config, str(output))
    rows = data_rows(output)
    assert all(float(row['wall_time']) >= 0 for row in rows if row['row_type'] == 'trial')


def test_certify_config(monkeypatch):
    monkeypatch.delenv('RATT_OUTPUT_DIR', raising=False)
    text = CAMPAIGN_YAML.replace('robots: 3', 'robots: 4').replace('[1, 1]', '[1, 3]')
    rows = experiment.certify_config(read_config.parse_config(text))
    assert len(rows) == 2
    assert all(cert.satisfied for *_, cert in rows)


def test_attack_eval_config(monkeypatch):
    monkeypatch.delenv('RATT_OUTPUT_DIR', raising=False)
    text = CAMPAIGN_YAML.replace('robots: 3', 'robots: 4').replace('[1, 1]', '[1, 3]')
    rows = experiment.attack_eval_config(read_config.parse_config(text))
    assert len(rows) == 4
    for row in rows:
        worstValue, boundedValue, evenValue = row[5], row[8], row[11]
        assert worstValue <= boundedValue
        assert worstValue <= evenValue
        assert row[-1] == 80
