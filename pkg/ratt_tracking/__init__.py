"""Robust multi-robot active target tracking against worst-case sensing and
communication attacks."""

package_info = {
    "name": "ratt-tracking",
    "version": (1, 0, 0),
    "description": "RATT planner, CAA, EKF tracking objective, attack oracles "
                   "and curvature-based bound certification",
    "category": "Numerical Optimization",
}

__version__ = '.'.join(str(part) for part in package_info["version"])

#############################################
# load sub-modules
_modules = [
    'tracking_const',
    'tracking_errors',
    'tracking_types',
    'models',
    'ekf',
    'objective',
    'caa',
    'adversary',
    'planner',
    'curvature',
]

__import__(name=__name__, fromlist=_modules)
# load sub-modules
#############################################

from .adversary import attack_runtime_budget, bounded_rational_attack, worst_case_attack  # noqa: E402
from .objective import TrackingObjective, connected_components, phi_subset, team_phi  # noqa: E402
from .planner import plan_greedy, plan_nropt, plan_opt, plan_random, plan_ratt  # noqa: E402
