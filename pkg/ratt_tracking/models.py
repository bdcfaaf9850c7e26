"""Robot, target and sensor models.

Robots follow a discrete unicycle model, targets a noisy circular-motion
model, and every robot carries a range-bearing sensor whose noise grows
with range and |bearing|.
"""
import math

import numpy as np

from . import tracking_const
from .tracking_errors import CoincidentPose
from .tracking_types import Measurement, RobotState, SensorNoiseParams, TargetState


def wrap_angle(angle):
    """Map an angle to (-pi, pi]."""
    if -math.pi < angle <= math.pi:
        return angle
    return math.pi - (math.pi - angle) % tracking_const.TWO_PI


def step_robot(state, control, tau):
    if tau <= 0:
        raise ValueError('tau must be positive')
    x = state.x + control.nu * tau * math.cos(state.theta)
    y = state.y + control.nu * tau * math.sin(state.theta)
    theta = state.theta
    if control.omega != 0:
        theta = wrap_angle(state.theta + tau * control.omega)
    return RobotState(x, y, theta)


def step_target(target, tau, noise=(0.0, 0.0)):
    """Advance a target one period. `noise` is a draw from N(0, sigma_q^2 I)
    made by the caller; zero gives the deterministic prediction."""
    if tau <= 0:
        raise ValueError('tau must be positive')
    y1 = target.y1 + target.nu * math.cos(tau * target.omega) + noise[0]
    y2 = target.y2 + target.nu * math.sin(tau * target.omega) + noise[1]
    return TargetState(y1, y2, target.nu, target.omega, target.sigma_q)


def _offset(robot, target_pos):
    d1 = target_pos[0] - robot.x
    d2 = target_pos[1] - robot.y
    r = math.hypot(d1, d2)
    if r < tracking_const.EPS_RANGE:
        raise CoincidentPose(
            'robot at ({:.6g}, {:.6g}) coincides with target'.format(robot.x, robot.y))
    return d1, d2, r


def noise_covariance(sensor, range, bearing):
    sigma_r = sensor.sigma_r0 + sensor.kappa_r * range
    sigma_b = sensor.sigma_b0 + sensor.kappa_b * abs(bearing)
    return np.diag((sigma_r * sigma_r, sigma_b * sigma_b))


def measure(robot, target_pos, sensor=None):
    """Noise-free range/bearing of a target and the noise covariance R."""
    if sensor is None:
        sensor = SensorNoiseParams()
    d1, d2, r = _offset(robot, target_pos)
    bearing = wrap_angle(math.atan2(d2, d1) - robot.theta)
    return Measurement(r, bearing), noise_covariance(sensor, r, bearing)


def measurement_jacobian(robot, target_pos):
    """Gradient of (range, bearing) with respect to the target position.

    The whole matrix carries the 1/r prefactor; with phi = theta + bearing
    the rows are (d1, d2)/r and (-sin phi, cos phi)/r.
    """
    d1, d2, r = _offset(robot, target_pos)
    heading = math.atan2(d2, d1)
    return np.array((
        (d1, d2),
        (-math.sin(heading), math.cos(heading)),
    )) / r


def sample_measurement(robot, target_pos, sensor, standard_noise):
    """Noisy measurement; `standard_noise` is a pair of N(0, 1) draws scaled
    here by the state-dependent standard deviations."""
    h, R = measure(robot, target_pos, sensor)
    r = max(h.range + math.sqrt(R[0, 0]) * standard_noise[0], 0.0)
    bearing = wrap_angle(h.bearing + math.sqrt(R[1, 1]) * standard_noise[1])
    return Measurement(r, bearing)
