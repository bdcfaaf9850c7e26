"""Per-target EKF: prediction, information-form fused covariance update and
the sequential mean update used to score estimates."""
import numpy as np

from . import models
from . import tracking_const
from .tracking_errors import SingularPrior
from .tracking_types import TargetBelief, TargetState


def inv2(matrix, what='matrix'):
    """Closed-form inverse of a 2x2 matrix."""
    a, b = matrix[0, 0], matrix[0, 1]
    c, d = matrix[1, 0], matrix[1, 1]
    det = a * d - b * c
    if abs(det) <= tracking_const.DET_GUARD:
        raise SingularPrior('{} is singular (det={:.3g})'.format(what, det))
    return np.array(((d, -b), (-c, a))) / det


def symmetrize(matrix):
    return 0.5 * (matrix + matrix.T)


def predict(belief, target, tau):
    """One-step prediction. A = I since the circular increment does not
    depend on the position; Q = sigma_q^2 I."""
    atMean = TargetState(belief.mean[0], belief.mean[1], target.nu, target.omega,
                         target.sigma_q)
    moved = models.step_target(atMean, tau)
    q = target.sigma_q * target.sigma_q
    return TargetBelief(moved.position, belief.cov + q * np.eye(2))


def information(H, R):
    """H^T R^-1 H for one robot's measurement of one target."""
    return symmetrize(H.T @ inv2(R, 'measurement covariance') @ H)


def fuse_information(prior_cov, info):
    """Posterior covariance from a prior and summed measurement information."""
    prior_info = inv2(prior_cov, 'prior covariance')
    return symmetrize(inv2(prior_info + info, 'posterior information'))


def fused_update_cov(update):
    """Posterior covariance of a fused multi-robot update,
    (Sigma^-1 + sum_k H_k^T R_k^-1 H_k)^-1."""
    if not update.contributions:
        inv2(update.prior.cov, 'prior covariance')
        return update.prior.cov.copy()
    info = np.zeros((2, 2))
    for H, R in update.contributions:
        info = info + information(H, R)
    return fuse_information(update.prior.cov, info)


def linearized_contribution(robot, target_pos, sensor):
    """(H, R) of one robot linearized at a target position."""
    _, R = models.measure(robot, target_pos, sensor)
    return models.measurement_jacobian(robot, target_pos), R


def posterior_mean(prior, measurements, sensor=None, return_cov=False):
    """Sequential EKF mean update over (measurement, robot) pairs,
    relinearizing at the current mean each time."""
    mean = prior.mean.copy()
    cov = prior.cov.copy()
    for z, robot in measurements:
        h, R = models.measure(robot, mean, sensor)
        H = models.measurement_jacobian(robot, mean)
        innovation = np.array((
            z.range - h.range,
            models.wrap_angle(z.bearing - h.bearing),
        ))
        S = H @ cov @ H.T + R
        K = cov @ H.T @ inv2(S, 'innovation covariance')
        mean = mean + K @ innovation
        cov = symmetrize((np.eye(2) - K @ H) @ cov)
    if return_cov:
        return mean, cov
    return mean


def inv2_batch(stack, what='matrix'):
    """Closed-form inverses of a stack of 2x2 matrices, shape (M, 2, 2)."""
    a, b = stack[:, 0, 0], stack[:, 0, 1]
    c, d = stack[:, 1, 0], stack[:, 1, 1]
    det = a * d - b * c
    if np.any(np.abs(det) <= tracking_const.DET_GUARD):
        raise SingularPrior('{} is singular'.format(what))
    inverse = np.empty_like(stack)
    inverse[:, 0, 0] = d
    inverse[:, 0, 1] = -b
    inverse[:, 1, 0] = -c
    inverse[:, 1, 1] = a
    return inverse / det[:, None, None]
