"""Command-line entry point."""
import argparse
import logging
import os
import sys

from . import caa
from . import experiment
from . import plot_results
from . import read_config
from . import tracking_const
from . import write_csv_results
from .timing import profile
from .tracking_errors import BudgetExceeded, ConfigInvalid, CsvMalformed, ScaleExceeded, TrackingError

log = logging.getLogger(__name__)


def outputDir(args, config=None):
    if args.out:
        return args.out
    if config is not None:
        return config.output_dir
    return os.environ.get(tracking_const.OUTPUT_DIR_ENV, tracking_const.DEFAULT_OUTPUT_DIR)


def loadConfig(args):
    config = read_config.read_config(args.config)
    return experiment.apply_overrides(config, args.seed, args.jobs, args.cap_evals)


def simulate(args):
    config = loadConfig(args)
    directory = outputDir(args, config)
    path = experiment.run_config(config, os.path.join(directory, tracking_const.CAMPAIGN_CSV))
    print(path)
    if args.plots:
        for plotPath in plot_results.emit_plots(path, os.path.join(directory, 'plots')):
            print(plotPath)
    return tracking_const.EXIT_OK


def runCaa(args):
    result = caa.caa(args.n, args.alpha_c)
    write_csv_results.writeCaaRow(sys.stdout, args.n, args.alpha_c, result)
    return tracking_const.EXIT_OK


def certify(args):
    rows = experiment.certify_config(loadConfig(args))
    write_csv_results.writeCertificates(sys.stdout, rows)
    if all(cert.satisfied for *_, cert in rows):
        return tracking_const.EXIT_OK
    return tracking_const.EXIT_FAILURE


def attackEval(args):
    rows = experiment.attack_eval_config(loadConfig(args))
    write_csv_results.writeAttackEvaluations(sys.stdout, rows)
    return tracking_const.EXIT_OK


def plot(args):
    for path in plot_results.emit_plots(args.csv, outputDir(args)):
        print(path)
    return tracking_const.EXIT_OK


def buildParser():
    parser = argparse.ArgumentParser(
        prog='ratt-tracking',
        description='Robust multi-robot target tracking against sensing and '
                    'communication attacks.')
    parser.add_argument('--seed', type=int, help='override the campaign seed')
    parser.add_argument('--jobs', type=int, help='parallel trial workers')
    parser.add_argument('--cap-evals', type=int, dest='cap_evals',
                        help='cap on exhaustive-search evaluations')
    parser.add_argument('--log-level', default='INFO',
                        choices=('DEBUG', 'INFO', 'WARNING', 'ERROR'))
    parser.add_argument('--profile', action='store_true', help='profile the command')
    commands = parser.add_subparsers(dest='command', required=True)

    command = commands.add_parser('simulate', help='run a campaign and write CSV')
    command.add_argument('--config', required=True)
    command.add_argument('--out', help='output directory (overrides '
                         '{} and the config)'.format(tracking_const.OUTPUT_DIR_ENV))
    command.add_argument('--plots', action='store_true', help='also emit plots')
    command.set_defaults(handler=simulate)

    command = commands.add_parser('caa', help='communication attack approximation')
    command.add_argument('--n', type=int, required=True)
    command.add_argument('--alpha-c', type=int, required=True, dest='alpha_c')
    command.set_defaults(handler=runCaa)

    command = commands.add_parser('certify', help='check the approximation bound')
    command.add_argument('--config', required=True)
    command.set_defaults(handler=certify)

    command = commands.add_parser('attack-eval', help='compare attack models')
    command.add_argument('--config', required=True)
    command.set_defaults(handler=attackEval)

    command = commands.add_parser('plot', help='plots from a campaign CSV')
    command.add_argument('--csv', required=True)
    command.add_argument('--out')
    command.set_defaults(handler=plot)
    return parser


def setupLogging(level):
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter('%(message)s'))
    root = logging.getLogger(tracking_const.PACKAGE_NAME)
    root.handlers[:] = [handler]
    root.setLevel(level)


def main(argv=None):
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return tracking_const.EXIT_OK if error.code == 0 else tracking_const.EXIT_CONFIG
    setupLogging(args.log_level)
    handler = profile(args.handler) if args.profile else args.handler
    try:
        return handler(args)
    except (ConfigInvalid, CsvMalformed, BudgetExceeded) as error:
        log.error('error: %s', error)
        return tracking_const.EXIT_CONFIG
    except ScaleExceeded as error:
        log.error('scale cap exceeded: %s', error)
        return tracking_const.EXIT_SCALE
    except (TrackingError, ValueError) as error:
        log.error('error: %s', error)
        return tracking_const.EXIT_FAILURE
