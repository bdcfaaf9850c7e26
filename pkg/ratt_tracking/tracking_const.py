import math

PACKAGE_NAME = 'ratt_tracking'

# Sensor noise (std grows affinely with range and |bearing|)
SIGMA_R0 = 0.5
KAPPA_R = 0.02
SIGMA_B0 = 0.05
KAPPA_B = 0.02

# Guards
EPS_RANGE = 1e-6
DET_GUARD = 1e-15
SINGULAR_TOL = 1e-12
MARGINAL_TOL = 1e-12
BOUND_SLACK = 1e-9

# Environment
ARENA = (100.0, 100.0)
TAU = 1.0
SIGMA_Q = 0.5
INITIAL_COV_SCALE = 4.0
INITIAL_MEAN_STD = 2.0

# Robot inputs U_i = {+-1, +-3} m/s x {0, 1, 3} rad/s
ROBOT_NU = (-3.0, -1.0, 1.0, 3.0)
ROBOT_OMEGA = (0.0, 1.0, 3.0)

# Target velocities {+-5/3, +-5/2, +-5} m/s x {1/10, 1/20, 1/30} rad/s
TARGET_NU = (-5.0, -5.0 / 2, -5.0 / 3, 5.0 / 3, 5.0 / 2, 5.0)
TARGET_OMEGA = (1.0 / 10, 1.0 / 20, 1.0 / 30)

# Exhaustive search caps
CAP_EVALS = 10 ** 8
CURVATURE_CAP = 8

# Objective kinds
OBJECTIVE_TRACE = 'trace'
OBJECTIVE_LOGDET = 'logdet'
OBJECTIVE_MAXEIG = 'maxeig'
OBJECTIVES = (OBJECTIVE_TRACE, OBJECTIVE_LOGDET, OBJECTIVE_MAXEIG)

# Planners
PLANNER_RATT = 'ratt'
PLANNER_OPT = 'opt'
PLANNER_NROPT = 'nr-opt'
PLANNER_GREEDY = 'greedy'
PLANNER_RANDOM = 'random'
PLANNERS = (PLANNER_OPT, PLANNER_RATT, PLANNER_NROPT, PLANNER_GREEDY,
            PLANNER_RANDOM)

# Attack modes
ATTACK_WORST = 'worst-case'
ATTACK_BOUNDED = 'bounded-rational'
ATTACK_NONE = 'none'
ATTACK_MODES = (ATTACK_WORST, ATTACK_BOUNDED, ATTACK_NONE)

# Bounded-rational ranking
RANK_ASSIGNED = 'assigned'
RANK_SOLO = 'solo'

# Budget presets: (alpha_s numerator/denominator, alpha_c fraction of |E|)
BUDGET_PRESETS = {
    'third': ((1, 3), (1, 4)),
    'half': ((1, 2), (1, 3)),
    'two_thirds': ((2, 3), (1, 2)),
}

# Formats
CONFIG_SCHEMA_VERSION = 1
CSV_SCHEMA_VERSION = 1
FLOAT_DIGITS = 17
ENCODING_READ = 'utf-8-sig'
ENCODING_WRITE = 'utf-8'
OUTPUT_DIR_ENV = 'RATT_OUTPUT_DIR'
DEFAULT_OUTPUT_DIR = 'results'
CAMPAIGN_CSV = 'campaign.csv'

# Exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_SCALE = 3

TWO_PI = 2.0 * math.pi
