"""Monte-Carlo driver: single trials, full campaigns, certification and
attack-evaluation sweeps."""
import logging
import multiprocessing
import os
import time

import numpy as np

from . import adversary
from . import caa
from . import curvature
from . import ekf
from . import mock_scenario
from . import models
from . import objective
from . import planner
from . import read_config
from . import tracking_const
from . import write_csv_results
from .timing import timing
from .tracking_types import AttackRealization, TargetState, TrialRecord

log = logging.getLogger(__name__)


class TrialNoise:
    """Standard-normal draws shared by every planner within a trial:
    process noise per target and measurement noise per (robot, target),
    one set per MSE sample. With several samples each one also redraws the
    targets' starting positions from the team's initial belief."""

    def __init__(self, process, measurement, start=None):
        self.process = process
        self.measurement = measurement
        self.start = start

    @property
    def samples(self):
        return len(self.process)

    @classmethod
    def draw(cls, scenario, rng, samples=1):
        if samples < 1:
            raise ValueError('at least one MSE sample is needed')
        process = rng.standard_normal((samples, scenario.n_targets, 2))
        measurement = rng.standard_normal(
            (samples, scenario.n_robots, scenario.n_targets, 2))
        start = None
        if samples > 1:
            start = rng.standard_normal((samples, scenario.n_targets, 2))
        return cls(process, measurement, start)

    def initial_targets(self, scenario, sample):
        """True target states the given sample starts from."""
        if self.start is None:
            return scenario.targets
        targets = []
        for j, (target, belief) in enumerate(zip(scenario.targets, scenario.beliefs)):
            y1, y2 = belief.mean + np.linalg.cholesky(belief.cov) @ self.start[sample, j]
            targets.append(TargetState(y1, y2, target.nu, target.omega, target.sigma_q))
        return targets


def trial_seeds(seed, trial):
    """(scenario seed, trial noise seed sequence) derived from the campaign
    seed and the trial id only, so execution order cannot matter."""
    scenarioSeq, noiseSeq = np.random.SeedSequence([seed, trial]).spawn(2)
    return int(scenarioSeq.generate_state(1, dtype=np.uint64)[0]), noiseSeq


def realize_attack(tracker, assignment, attack_mode, alpha_s, alpha_c,
                   cap=tracking_const.CAP_EVALS, rank_by=tracking_const.RANK_ASSIGNED,
                   all_sizes=False):
    scenario = tracker.scenario
    if attack_mode == tracking_const.ATTACK_WORST:
        attack, _ = adversary.worst_case_attack(
            scenario, assignment, alpha_s, alpha_c, tracker, cap, all_sizes)
        return attack
    if attack_mode == tracking_const.ATTACK_BOUNDED:
        return adversary.bounded_rational_attack(
            scenario, assignment, alpha_s, alpha_c, tracker, rank_by)
    if attack_mode == tracking_const.ATTACK_NONE:
        return AttackRealization()
    raise ValueError('unknown attack mode {!r}'.format(attack_mode))


def estimate(tracker, assignment, contributors, noise):
    """Sample the true target step and the contributors' measurements, then
    return (posterior covariances, posterior means, true positions). Means
    and positions carry one leading row per noise sample."""
    scenario = tracker.scenario
    pairs = [(robot, assignment[robot]) for robot in contributors]
    covs = tracker.posterior_covs(pairs)
    means = np.empty((noise.samples, scenario.n_targets, 2))
    truth = np.empty_like(means)
    for k in range(noise.samples):
        for j, target in enumerate(noise.initial_targets(scenario, k)):
            moved = models.step_target(
                target, scenario.tau, target.sigma_q * noise.process[k, j])
            measurements = []
            for robot, index in pairs:
                state = tracker.next_state(robot, index)
                z = models.sample_measurement(
                    state, moved.position, scenario.sensor, noise.measurement[k, robot, j])
                measurements.append((z, state))
            means[k, j] = ekf.posterior_mean(
                tracker.predicted[j], measurements, scenario.sensor)
            truth[k, j] = moved.position
    return covs, means, truth


def run_trial(scenario, planner_name, attack_mode, alpha_s, alpha_c, rng, trial=0,
              kind=tracking_const.OBJECTIVE_TRACE, cap=tracking_const.CAP_EVALS,
              condition_on_baits=False, rank_by=tracking_const.RANK_ASSIGNED,
              all_sizes=False, mse_samples=1):
    """Plan, attack, measure and score one planner on one scenario.

    Noise is drawn from `rng` before planning, so the same generator state
    gives every planner the same target motion and measurement noise. The
    MSE is averaged over `mse_samples` such draws.
    """
    noise = TrialNoise.draw(scenario, rng, mse_samples)
    tracker = objective.TrackingObjective(scenario, kind)
    start = time.perf_counter()
    result = planner.plan(planner_name, scenario, alpha_s, alpha_c, tracker, rng,
                          cap, condition_on_baits)
    wallTime = time.perf_counter() - start
    assignment = result.assignment
    attack = realize_attack(tracker, assignment, attack_mode, alpha_s, alpha_c,
                            cap, rank_by, all_sizes)
    attack.check(scenario.n_robots, alpha_s)
    value, winner = tracker.team_phi_detail(assignment, attack)
    contributors = sorted(winner - attack.sensing)
    covs, means, truth = estimate(tracker, assignment, contributors, noise)
    avgTrace = float(np.mean(np.trace(covs, axis1=1, axis2=2)))
    mse = float(np.mean(np.sum((means - truth) ** 2, axis=-1)))
    log.debug('trial %d %s/%s (%d, %d): inputs %s, trace %.4f mse %.4f', trial,
              planner_name, attack_mode, alpha_s, alpha_c, assignment.controls(scenario),
              avgTrace, mse)
    return TrialRecord(
        planner_name, attack_mode, trial, alpha_s, alpha_c,
        caa.caa(scenario.n_robots, alpha_c).alpha_cs, avgTrace, mse, value,
        result.evals.count, len(attack.edges), wallTime)


def campaign_cells(config):
    for alpha_s, alpha_c in config.budgets:
        for mode in config.attack_modes:
            for name in config.planners:
                yield name, mode, alpha_s, alpha_c


def run_trial_cells(config, trial):
    """Every (planner, mode, budget) cell of one trial id."""
    scenarioSeed, noiseSeq = trial_seeds(config.seed, trial)
    scenario = mock_scenario.generate_scenario(config.generator, scenarioSeed)
    records = []
    for name, mode, alpha_s, alpha_c in campaign_cells(config):
        rng = np.random.default_rng(noiseSeq)
        records.append(run_trial(
            scenario, name, mode, alpha_s, alpha_c, rng, trial, config.objective,
            config.cap_evals, config.condition_on_baits, config.rank_by,
            config.all_sizes, config.mse_samples))
    log.info('trial %d done (%d cells)', trial, len(records))
    return records


def _trialWorker(args):
    config, trial = args
    return run_trial_cells(config, trial)


def run_trials(config, trials):
    if config.jobs > 1 and len(trials) > 1:
        with multiprocessing.Pool(min(config.jobs, len(trials))) as pool:
            batches = pool.map(_trialWorker, [(config, trial) for trial in trials])
    else:
        batches = [run_trial_cells(config, trial) for trial in trials]
    return [record for batch in batches for record in batch]


def campaign_metadata(config):
    generator = config.generator
    return [
        ('seed', config.seed),
        ('trials', config.trials),
        ('robots', generator.n_robots),
        ('targets', generator.n_targets),
        ('objective', config.objective),
        ('initial_cov_scale', generator.initial_cov_scale),
        ('initial_mean_std', generator.initial_mean_std),
        ('sigma_q', generator.sigma_q),
        ('mse_samples', config.mse_samples),
    ]


def banner(title):
    log.info('-' * 60)
    log.info('{:-^60}'.format(' EXECUTING {} '.format(title)))
    log.info('-' * 60)


def run_config(config, output_path):
    banner('RATT CAMPAIGN')
    log.info('%d trials x %d planners x %d modes x %d budgets', config.trials,
             len(config.planners), len(config.attack_modes), len(config.budgets))
    records = run_trials(config, list(range(config.trials)))
    directory = os.path.dirname(output_path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    write_csv_results.writeCampaignFile(
        output_path, records, campaign_metadata(config), config.wall_time)
    log.info('wrote %d trial rows to %s', len(records), output_path)
    return output_path


@timing
def run_campaign(config_file, output_path, seed=None, jobs=None, cap_evals=None):
    config = read_config.read_config(config_file)
    apply_overrides(config, seed, jobs, cap_evals)
    return run_config(config, output_path)


def apply_overrides(config, seed=None, jobs=None, cap_evals=None):
    if seed is not None:
        config.seed = seed
    if jobs is not None:
        config.jobs = jobs
    if cap_evals is not None:
        config.cap_evals = cap_evals
    return config


def trial_scenario(config, trial):
    return mock_scenario.generate_scenario(config.generator, trial_seeds(config.seed, trial)[0])


@timing
def certify_config(config):
    """One certificate per (trial, budget)."""
    banner('BOUND CERTIFICATION')
    rows = []
    for trial in range(config.trials):
        scenario = trial_scenario(config, trial)
        for alpha_s, alpha_c in config.budgets:
            tracker = objective.TrackingObjective(scenario, config.objective)
            cert = curvature.certify_theorem1(
                scenario, alpha_s, alpha_c, config.cap_evals, tracker=tracker,
                condition_on_baits=config.condition_on_baits)
            rows.append((trial, alpha_s, alpha_c, cert))
    violated = sum(not cert.satisfied for *_, cert in rows)
    log.info('%d certificates, %d violated', len(rows), violated)
    return rows


@timing
def attack_eval_config(config):
    """Worst-case against bounded-rational damage for every planner's
    assignment, per (trial, budget), next to the value left by the even
    split that the communication attack approximation assumes."""
    banner('ATTACK EVALUATION')
    rows = []
    for trial in range(config.trials):
        scenario = trial_scenario(config, trial)
        _, noiseSeq = trial_seeds(config.seed, trial)
        for alpha_s, alpha_c in config.budgets:
            alpha_cs = caa.caa(scenario.n_robots, alpha_c).alpha_cs
            count = adversary.attack_count(scenario.n_robots, alpha_s, alpha_c,
                                           config.all_sizes)
            # the cut CAA assumes, without sensing attacks
            evenSplit = AttackRealization(
                (), caa.even_split_edges(scenario.n_robots, alpha_c))
            for name in config.planners:
                tracker = objective.TrackingObjective(scenario, config.objective)
                rng = np.random.default_rng(noiseSeq)
                TrialNoise.draw(scenario, rng, config.mse_samples)
                result = planner.plan(name, scenario, alpha_s, alpha_c, tracker, rng,
                                      config.cap_evals, config.condition_on_baits)
                worst, worstValue = adversary.worst_case_attack(
                    scenario, result.assignment, alpha_s, alpha_c, tracker,
                    config.cap_evals, config.all_sizes)
                bounded = adversary.bounded_rational_attack(
                    scenario, result.assignment, alpha_s, alpha_c, tracker, config.rank_by)
                boundedValue = tracker.team_phi(result.assignment, bounded)
                evenValue = tracker.team_phi(result.assignment, evenSplit)
                rows.append([
                    trial, name, alpha_s, alpha_c, alpha_cs, worstValue,
                    ' '.join(map(str, sorted(worst.sensing))), len(worst.edges),
                    boundedValue, ' '.join(map(str, sorted(bounded.sensing))),
                    len(bounded.edges), evenValue, count])
    return rows
