"""Campaign file ingestion.

Campaign files are YAML. Every problem is reported as ConfigInvalid with
the dotted field name and the line it sits on.
"""
import os

import yaml

from . import caa
from . import tracking_const
from .tracking_errors import ConfigInvalid
from .tracking_types import CampaignConfig, GeneratorSpec, SensorNoiseParams

TOP_KEYS = {
    'schema_version', 'seed', 'trials', 'planners', 'attack_modes', 'budgets',
    'generator', 'planner_options', 'report', 'output_dir',
}
GENERATOR_KEYS = {
    'robots', 'targets', 'arena', 'tau', 'robot_nu', 'robot_omega',
    'target_nu', 'target_omega', 'sigma_q', 'sensor', 'initial_cov_scale',
    'initial_mean_std',
}
SENSOR_KEYS = {'sigma_r0', 'kappa_r', 'sigma_b0', 'kappa_b'}
OPTION_KEYS = {'objective', 'condition_on_baits', 'rank_by', 'all_sizes', 'cap_evals'}
REPORT_KEYS = {'wall_time', 'mse_samples'}


def lineIndex(node, path=(), index=None):
    """Map dotted key paths to 1-based YAML line numbers."""
    if index is None:
        index = {}
    if node is None:
        return index
    index.setdefault('.'.join(path), node.start_mark.line + 1)
    if isinstance(node, yaml.MappingNode):
        for keyNode, valueNode in node.value:
            childPath = path + (str(keyNode.value),)
            index['.'.join(childPath)] = keyNode.start_mark.line + 1
            lineIndex(valueNode, childPath, index)
    elif isinstance(node, yaml.SequenceNode):
        for position, item in enumerate(node.value):
            lineIndex(item, path + (str(position),), index)
    return index


class ConfigReader:

    def __init__(self, text, filename='<config>'):
        self.filename = filename
        try:
            self.data = yaml.safe_load(text)
            self.lines = lineIndex(yaml.compose(text))
        except yaml.YAMLError as error:
            mark = getattr(error, 'problem_mark', None)
            raise ConfigInvalid('{}: not valid YAML: {}'.format(
                filename, getattr(error, 'problem', error)),
                line=mark.line + 1 if mark else None)
        if not isinstance(self.data, dict):
            raise ConfigInvalid('{}: top level must be a mapping'.format(filename))

    def fail(self, message, field):
        line = self.lines.get(field)
        while line is None and '.' in field:
            field = field.rsplit('.', 1)[0]
            line = self.lines.get(field)
        raise ConfigInvalid(message, field, line)

    def checkKeys(self, mapping, allowed, prefix):
        for key in mapping:
            if key not in allowed:
                field = '{}.{}'.format(prefix, key) if prefix else str(key)
                self.fail('unknown key', field)

    def section(self, mapping, key, prefix=''):
        field = '{}.{}'.format(prefix, key) if prefix else key
        value = mapping.get(key, {})
        if value is None:
            value = {}
        if not isinstance(value, dict):
            self.fail('must be a mapping', field)
        return value

    def number(self, mapping, key, default, prefix='', kind=float, minimum=None,
               positive=False):
        field = '{}.{}'.format(prefix, key) if prefix else key
        value = mapping.get(key, default)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.fail('must be a number', field)
        if kind is int and value != int(value):
            self.fail('must be an integer', field)
        value = kind(value)
        if positive and value <= 0:
            self.fail('must be positive', field)
        if minimum is not None and value < minimum:
            self.fail('must be at least {}'.format(minimum), field)
        return value

    def flag(self, mapping, key, default, prefix):
        value = mapping.get(key, default)
        if not isinstance(value, bool):
            self.fail('must be true or false', '{}.{}'.format(prefix, key))
        return value

    def numberList(self, mapping, key, default, prefix):
        field = '{}.{}'.format(prefix, key)
        values = mapping.get(key, default)
        if not isinstance(values, (list, tuple)) or not values:
            self.fail('must be a non-empty list', field)
        for position, value in enumerate(values):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                self.fail('must be a number', '{}.{}'.format(field, position))
        return tuple(float(value) for value in values)

    def choices(self, key, allowed):
        values = self.data.get(key)
        if not isinstance(values, list) or not values:
            self.fail('must be a non-empty list', key)
        for position, value in enumerate(values):
            if value not in allowed:
                self.fail('unknown value {!r}; expected one of {}'.format(
                    value, ', '.join(allowed)), '{}.{}'.format(key, position))
        return values

    def readSensor(self, generator):
        sensor = self.section(generator, 'sensor', 'generator')
        self.checkKeys(sensor, SENSOR_KEYS, 'generator.sensor')
        prefix = 'generator.sensor'
        return SensorNoiseParams(
            self.number(sensor, 'sigma_r0', tracking_const.SIGMA_R0, prefix, positive=True),
            self.number(sensor, 'kappa_r', tracking_const.KAPPA_R, prefix, minimum=0),
            self.number(sensor, 'sigma_b0', tracking_const.SIGMA_B0, prefix, positive=True),
            self.number(sensor, 'kappa_b', tracking_const.KAPPA_B, prefix, minimum=0))

    def readGenerator(self):
        generator = self.section(self.data, 'generator')
        self.checkKeys(generator, GENERATOR_KEYS, 'generator')
        prefix = 'generator'
        arena = self.numberList(generator, 'arena', tracking_const.ARENA, prefix)
        if len(arena) != 2 or min(arena) <= 0:
            self.fail('must be two positive numbers', 'generator.arena')
        return GeneratorSpec(
            n_robots=self.number(generator, 'robots', None, prefix, int, positive=True),
            n_targets=self.number(generator, 'targets', None, prefix, int, positive=True),
            arena=arena,
            tau=self.number(generator, 'tau', tracking_const.TAU, prefix, positive=True),
            robot_nu=self.numberList(generator, 'robot_nu', tracking_const.ROBOT_NU, prefix),
            robot_omega=self.numberList(
                generator, 'robot_omega', tracking_const.ROBOT_OMEGA, prefix),
            target_nu=self.numberList(generator, 'target_nu', tracking_const.TARGET_NU, prefix),
            target_omega=self.numberList(
                generator, 'target_omega', tracking_const.TARGET_OMEGA, prefix),
            sigma_q=self.number(generator, 'sigma_q', tracking_const.SIGMA_Q, prefix, minimum=0),
            sensor=self.readSensor(generator),
            initial_cov_scale=self.number(
                generator, 'initial_cov_scale', tracking_const.INITIAL_COV_SCALE, prefix,
                positive=True),
            initial_mean_std=self.number(
                generator, 'initial_mean_std', tracking_const.INITIAL_MEAN_STD, prefix,
                minimum=0))

    def readBudgets(self, n_robots):
        budgets = self.data.get('budgets')
        if not isinstance(budgets, list) or not budgets:
            self.fail('must be a non-empty list', 'budgets')
        edges = caa.edge_count(n_robots)
        resolved = []
        for position, budget in enumerate(budgets):
            field = 'budgets.{}'.format(position)
            if isinstance(budget, str):
                if budget not in tracking_const.BUDGET_PRESETS:
                    self.fail('unknown preset {!r}'.format(budget), field)
                (sNum, sDen), (cNum, cDen) = tracking_const.BUDGET_PRESETS[budget]
                budget = (sNum * n_robots // sDen, cNum * edges // cDen)
            elif (not isinstance(budget, list) or len(budget) != 2
                    or not all(isinstance(value, int) and not isinstance(value, bool)
                               for value in budget)):
                self.fail('must be a preset name or [alpha_s, alpha_c]', field)
            alpha_s, alpha_c = budget
            if not 0 <= alpha_s <= n_robots:
                self.fail('alpha_s must lie in [0, {}]'.format(n_robots), field)
            if not 0 <= alpha_c <= edges:
                self.fail('alpha_c must lie in [0, {}]'.format(edges), field)
            resolved.append((alpha_s, alpha_c))
        return resolved

    def read(self):
        self.checkKeys(self.data, TOP_KEYS, '')
        version = self.data.get('schema_version')
        if version != tracking_const.CONFIG_SCHEMA_VERSION:
            self.fail('unsupported schema_version {!r}, expected {}'.format(
                version, tracking_const.CONFIG_SCHEMA_VERSION), 'schema_version')
        generator = self.readGenerator()
        options = self.section(self.data, 'planner_options')
        self.checkKeys(options, OPTION_KEYS, 'planner_options')
        report = self.section(self.data, 'report')
        self.checkKeys(report, REPORT_KEYS, 'report')
        kind = options.get('objective', tracking_const.OBJECTIVE_TRACE)
        if kind not in tracking_const.OBJECTIVES:
            self.fail('unknown objective {!r}'.format(kind), 'planner_options.objective')
        rankBy = options.get('rank_by', tracking_const.RANK_ASSIGNED)
        if rankBy not in (tracking_const.RANK_ASSIGNED, tracking_const.RANK_SOLO):
            self.fail('unknown ranking {!r}'.format(rankBy), 'planner_options.rank_by')
        outputDir = self.data.get('output_dir', tracking_const.DEFAULT_OUTPUT_DIR)
        if not isinstance(outputDir, str):
            self.fail('must be a path', 'output_dir')
        return CampaignConfig(
            generator=generator,
            planners=self.choices('planners', tracking_const.PLANNERS),
            attack_modes=self.choices('attack_modes', tracking_const.ATTACK_MODES),
            budgets=self.readBudgets(generator.n_robots),
            trials=self.number(self.data, 'trials', 1, kind=int, positive=True),
            seed=self.number(self.data, 'seed', 0, kind=int, minimum=0),
            cap_evals=self.number(options, 'cap_evals', tracking_const.CAP_EVALS,
                                  'planner_options', int, positive=True),
            objective=kind,
            condition_on_baits=self.flag(options, 'condition_on_baits', False,
                                         'planner_options'),
            rank_by=rankBy,
            all_sizes=self.flag(options, 'all_sizes', False, 'planner_options'),
            wall_time=self.flag(report, 'wall_time', False, 'report'),
            mse_samples=self.number(report, 'mse_samples', 1, 'report', int,
                                    positive=True),
            output_dir=os.environ.get(tracking_const.OUTPUT_DIR_ENV) or outputDir)


def parse_config(text, filename='<config>'):
    return ConfigReader(text, filename).read()


def read_config(filename):
    try:
        with open(filename, 'r', encoding=tracking_const.ENCODING_READ) as file:
            text = file.read()
    except OSError as error:
        raise ConfigInvalid('cannot read {}: {}'.format(filename, error.strerror))
    return parse_config(text, filename)
