import itertools

import numpy as np

from . import tracking_const


class RobotState:

    def __init__(self, x, y, theta):
        self.x = float(x)
        self.y = float(y)
        self.theta = float(theta)

    @property
    def position(self):
        return np.array((self.x, self.y))

    def __eq__(self, other):
        return (isinstance(other, RobotState)
                and (self.x, self.y, self.theta) == (other.x, other.y, other.theta))

    def __repr__(self):
        return 'RobotState({!r}, {!r}, {!r})'.format(self.x, self.y, self.theta)


class ControlInput:

    def __init__(self, nu, omega):
        self.nu = float(nu)
        self.omega = float(omega)

    def __eq__(self, other):
        return (isinstance(other, ControlInput)
                and (self.nu, self.omega) == (other.nu, other.omega))

    def __hash__(self):
        return hash((self.nu, self.omega))

    def __repr__(self):
        return 'ControlInput({!r}, {!r})'.format(self.nu, self.omega)


class TargetState:

    def __init__(self, y1, y2, nu, omega, sigma_q=tracking_const.SIGMA_Q):
        if sigma_q < 0:
            raise ValueError('sigma_q must be non-negative')
        self.y1 = float(y1)
        self.y2 = float(y2)
        self.nu = float(nu)
        self.omega = float(omega)
        self.sigma_q = float(sigma_q)

    @property
    def position(self):
        return np.array((self.y1, self.y2))

    def __eq__(self, other):
        return (isinstance(other, TargetState)
                and self.__dict__ == other.__dict__)

    def __repr__(self):
        return 'TargetState({y1!r}, {y2!r}, {nu!r}, {omega!r}, {sigma_q!r})'.format(
            **self.__dict__)


class SensorNoiseParams:
    """Range/bearing noise: sigma_r = sigma_r0 + kappa_r * range and
    sigma_b = sigma_b0 + kappa_b * |bearing|."""

    def __init__(
            self,
            sigma_r0=tracking_const.SIGMA_R0,
            kappa_r=tracking_const.KAPPA_R,
            sigma_b0=tracking_const.SIGMA_B0,
            kappa_b=tracking_const.KAPPA_B):
        if min(sigma_r0, kappa_r, sigma_b0, kappa_b) < 0:
            raise ValueError('sensor noise parameters must be non-negative')
        if sigma_r0 <= 0 or sigma_b0 <= 0:
            raise ValueError('sigma_r0 and sigma_b0 must be positive')
        self.sigma_r0 = float(sigma_r0)
        self.kappa_r = float(kappa_r)
        self.sigma_b0 = float(sigma_b0)
        self.kappa_b = float(kappa_b)

    def __eq__(self, other):
        return (isinstance(other, SensorNoiseParams)
                and self.__dict__ == other.__dict__)


class Measurement:

    def __init__(self, range, bearing):
        self.range = float(range)
        self.bearing = float(bearing)

    def __repr__(self):
        return 'Measurement({!r}, {!r})'.format(self.range, self.bearing)


class TargetBelief:

    def __init__(self, mean, cov):
        self.mean = np.asarray(mean, dtype=float).reshape(2)
        self.cov = np.asarray(cov, dtype=float).reshape(2, 2)

    def __eq__(self, other):
        return (isinstance(other, TargetBelief)
                and np.array_equal(self.mean, other.mean)
                and np.array_equal(self.cov, other.cov))

    def __repr__(self):
        return 'TargetBelief(mean={}, cov={})'.format(
            self.mean.tolist(), self.cov.tolist())


class FusedUpdateInput:

    def __init__(self, prior, contributions=()):
        self.prior = prior
        self.contributions = list(contributions)


class Scenario:
    """A planning instance: robots with their input sets, targets with the
    team's beliefs, sensor noise, sampling period and arena."""

    def __init__(
            self,
            robots,
            inputs,
            targets,
            beliefs,
            sensor=None,
            tau=tracking_const.TAU,
            arena=tracking_const.ARENA,
            seed=0):
        self.robots = list(robots)
        self.inputs = [list(robotInputs) for robotInputs in inputs]
        self.targets = list(targets)
        self.beliefs = list(beliefs)
        self.sensor = sensor if sensor is not None else SensorNoiseParams()
        self.tau = float(tau)
        self.arena = (float(arena[0]), float(arena[1]))
        self.seed = int(seed)
        self.validate()

    def validate(self):
        if not self.robots:
            raise ValueError('scenario needs at least one robot')
        if not self.targets:
            raise ValueError('scenario needs at least one target')
        if len(self.inputs) != len(self.robots):
            raise ValueError('one input set per robot is required')
        if any(not robotInputs for robotInputs in self.inputs):
            raise ValueError('every robot input set must be non-empty')
        if len(self.beliefs) != len(self.targets):
            raise ValueError('one belief per target is required')
        if self.tau <= 0:
            raise ValueError('tau must be positive')
        width, height = self.arena
        if width <= 0 or height <= 0:
            raise ValueError('arena must be positive')
        positions = [robot.position for robot in self.robots]
        positions += [target.position for target in self.targets]
        for x, y in positions:
            if not (0.0 <= x <= width and 0.0 <= y <= height):
                raise ValueError('initial position ({:.6g}, {:.6g}) outside the {:g} x {:g} arena'
                                 .format(x, y, width, height))

    @property
    def n_robots(self):
        return len(self.robots)

    @property
    def n_targets(self):
        return len(self.targets)

    @property
    def robot_ids(self):
        return tuple(range(self.n_robots))

    def edges(self):
        """Edges of the complete communication graph, as (i, j) with i < j."""
        return list(itertools.combinations(self.robot_ids, 2))

    def input_count(self):
        """|U_V|, the number of (robot, input) pairs."""
        return sum(len(robotInputs) for robotInputs in self.inputs)

    def control(self, robot, index):
        return self.inputs[robot][index]

    def __eq__(self, other):
        return (isinstance(other, Scenario)
                and self.robots == other.robots
                and self.inputs == other.inputs
                and self.targets == other.targets
                and self.beliefs == other.beliefs
                and self.sensor == other.sensor
                and (self.tau, self.arena, self.seed)
                == (other.tau, other.arena, other.seed))


class GeneratorSpec:

    def __init__(
            self,
            n_robots,
            n_targets,
            arena=tracking_const.ARENA,
            tau=tracking_const.TAU,
            robot_nu=tracking_const.ROBOT_NU,
            robot_omega=tracking_const.ROBOT_OMEGA,
            target_nu=tracking_const.TARGET_NU,
            target_omega=tracking_const.TARGET_OMEGA,
            sigma_q=tracking_const.SIGMA_Q,
            sensor=None,
            initial_cov_scale=tracking_const.INITIAL_COV_SCALE,
            initial_mean_std=tracking_const.INITIAL_MEAN_STD):
        if n_robots < 1 or n_targets < 1:
            raise ValueError('robot and target counts must be positive')
        if arena[0] <= 0 or arena[1] <= 0 or tau <= 0:
            raise ValueError('arena and tau must be positive')
        if initial_cov_scale <= 0:
            raise ValueError('initial covariance scale must be positive')
        self.n_robots = int(n_robots)
        self.n_targets = int(n_targets)
        self.arena = (float(arena[0]), float(arena[1]))
        self.tau = float(tau)
        self.robot_nu = tuple(robot_nu)
        self.robot_omega = tuple(robot_omega)
        self.target_nu = tuple(target_nu)
        self.target_omega = tuple(target_omega)
        self.sigma_q = float(sigma_q)
        self.sensor = sensor if sensor is not None else SensorNoiseParams()
        self.initial_cov_scale = float(initial_cov_scale)
        self.initial_mean_std = float(initial_mean_std)

    def robotInputs(self):
        return [ControlInput(nu, omega)
                for nu in self.robot_nu for omega in self.robot_omega]


class Assignment:
    """Chosen input of each robot, stored as an index into its U_i."""

    def __init__(self, choice=None):
        self.choice = dict(choice or {})

    def controls(self, scenario):
        return {robot: scenario.control(robot, index)
                for robot, index in self.choice.items()}

    def __getitem__(self, robot):
        return self.choice[robot]

    def __contains__(self, robot):
        return robot in self.choice

    def __len__(self):
        return len(self.choice)

    def __eq__(self, other):
        return isinstance(other, Assignment) and self.choice == other.choice

    def __repr__(self):
        return 'Assignment({})'.format(dict(sorted(self.choice.items())))


def edge(i, j):
    """Unordered robot pair in canonical (small, large) order."""
    if i == j:
        raise ValueError('an edge needs two distinct robots')
    return (i, j) if i < j else (j, i)


class AttackRealization:

    def __init__(self, sensing=(), edges=()):
        self.sensing = frozenset(sensing)
        self.edges = frozenset(edge(i, j) for i, j in edges)

    def check(self, n_robots, alpha_s=None, alpha_c=None):
        if alpha_s is not None and len(self.sensing) > alpha_s:
            raise ValueError('sensing attack larger than alpha_s')
        if alpha_c is not None and len(self.edges) > alpha_c:
            raise ValueError('communication attack larger than alpha_c')
        members = set(self.sensing).union(*self.edges) if self.edges else set(self.sensing)
        if any(robot < 0 or robot >= n_robots for robot in members):
            raise ValueError('attack names a robot outside the team')

    def sortKey(self):
        return (tuple(sorted(self.sensing)), tuple(sorted(self.edges)))

    def __eq__(self, other):
        return (isinstance(other, AttackRealization)
                and self.sensing == other.sensing
                and self.edges == other.edges)

    def __repr__(self):
        sensing, edges = self.sortKey()
        return 'AttackRealization(sensing={}, edges={})'.format(
            list(sensing), list(edges))


class EvalCounter:
    """Number of objective evaluations."""

    def __init__(self, count=0):
        self.count = int(count)

    def increment(self, amount=1):
        self.count += amount

    def __repr__(self):
        return 'EvalCounter({})'.format(self.count)


class PlanResult:

    def __init__(self, assignment, baits, greedy_order, alpha, evals):
        self.assignment = assignment
        self.baits = frozenset(baits)
        self.greedy_order = list(greedy_order)
        self.alpha = int(alpha)
        self.evals = evals


class CaaResult:

    def __init__(self, n_max, alpha_cs, e_r, ebar):
        self.n_max = n_max
        self.alpha_cs = alpha_cs
        self.e_r = e_r
        self.ebar = list(ebar)

    def __repr__(self):
        return 'CaaResult(n_max={}, alpha_cs={}, e_r={}, ebar={})'.format(
            self.n_max, self.alpha_cs, self.e_r, self.ebar)


class BoundCertificate:

    def __init__(
            self,
            ratio,
            bound,
            c_phi=None,
            k_phi=None,
            k_bound=None,
            alpha_cs=0,
            achieved=None,
            optimal=None):
        self.ratio = float(ratio)
        self.bound = float(bound)
        self.c_phi = c_phi
        self.k_phi = k_phi
        self.k_bound = k_bound
        self.alpha_cs = alpha_cs
        self.achieved = achieved
        self.optimal = optimal
        self.satisfied = self.ratio >= self.bound - tracking_const.BOUND_SLACK
        self.k_satisfied = None
        if k_bound is not None:
            self.k_satisfied = self.ratio >= k_bound - tracking_const.BOUND_SLACK


class TrialRecord:

    def __init__(
            self,
            planner,
            attack_mode,
            trial,
            alpha_s,
            alpha_c,
            alpha_cs,
            avg_trace,
            mse,
            phi,
            evals,
            blocked_edges,
            wall_time=0.0):
        self.planner = planner
        self.attack_mode = attack_mode
        self.trial = trial
        self.alpha_s = alpha_s
        self.alpha_c = alpha_c
        self.alpha_cs = alpha_cs
        self.avg_trace = avg_trace
        self.mse = mse
        self.phi = phi
        self.evals = evals
        self.blocked_edges = blocked_edges
        self.wall_time = wall_time


class CampaignConfig:

    def __init__(
            self,
            generator,
            planners,
            attack_modes,
            budgets,
            trials,
            seed=0,
            cap_evals=tracking_const.CAP_EVALS,
            objective=tracking_const.OBJECTIVE_TRACE,
            condition_on_baits=False,
            rank_by=tracking_const.RANK_ASSIGNED,
            all_sizes=False,
            wall_time=False,
            output_dir=tracking_const.DEFAULT_OUTPUT_DIR,
            jobs=1,
            mse_samples=1):
        self.generator = generator
        self.planners = list(planners)
        self.attack_modes = list(attack_modes)
        self.budgets = [tuple(budget) for budget in budgets]
        self.trials = int(trials)
        self.seed = int(seed)
        self.cap_evals = int(cap_evals)
        self.objective = objective
        self.condition_on_baits = bool(condition_on_baits)
        self.rank_by = rank_by
        self.all_sizes = bool(all_sizes)
        self.wall_time = bool(wall_time)
        self.output_dir = output_dir
        self.jobs = int(jobs)
        self.mse_samples = int(mse_samples)
