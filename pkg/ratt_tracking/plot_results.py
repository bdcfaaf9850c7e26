"""Grouped bar charts of avg_trace and mse from a campaign CSV."""
import csv
import logging
import os

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from . import ascii_ops  # noqa: E402
from . import tracking_const  # noqa: E402
from .tracking_errors import CsvMalformed  # noqa: E402

log = logging.getLogger(__name__)

METRICS = ('avg_trace', 'mse')
REQUIRED = ('row_type', 'planner', 'attack_mode', 'alpha_s', 'alpha_c') + METRICS

plt.rcParams['svg.hashsalt'] = tracking_const.PACKAGE_NAME


def readTrialRows(filename):
    """Trial rows of a campaign CSV as dicts with parsed metrics."""
    try:
        with open(filename, 'r', encoding=tracking_const.ENCODING_READ) as file:
            lines = file.read().splitlines()
    except OSError as error:
        raise CsvMalformed('cannot read {}: {}'.format(filename, error.strerror))
    meta = ascii_ops.readComments(lines)
    version = meta.get('schema_version', str(tracking_const.CSV_SCHEMA_VERSION))
    if version != str(tracking_const.CSV_SCHEMA_VERSION):
        raise CsvMalformed('unsupported schema_version {!r}'.format(version), 1)
    log.debug('campaign metadata: %s', meta)
    numbered = list(ascii_ops.dataLines(lines))
    if not numbered:
        return []
    numbers = [number for number, _ in numbered]
    reader = csv.reader([line for _, line in numbered])
    header = next(reader)
    missing = [column for column in REQUIRED if column not in header]
    if missing:
        raise CsvMalformed('missing columns: {}'.format(', '.join(missing)), numbers[0])
    rows = []
    for number, values in zip(numbers[1:], reader):
        if len(values) != len(header):
            raise CsvMalformed('expected {} cells, got {}'.format(
                len(header), len(values)), number)
        row = dict(zip(header, values))
        if row['row_type'] != 'trial':
            continue
        row['alpha_s'] = ascii_ops.getInt(row['alpha_s'], number)
        row['alpha_c'] = ascii_ops.getInt(row['alpha_c'], number)
        for metric in METRICS:
            row[metric] = ascii_ops.getFloat(row[metric], number)
        rows.append(row)
    return rows


def ordered(values):
    seen = []
    for value in values:
        if value not in seen:
            seen.append(value)
    return seen


def build_figure(rows, metric, title=''):
    """Bars grouped by planner, one bar per attack mode, height = mean over
    trials, error bar = sample std."""
    planners = ordered(row['planner'] for row in rows)
    modes = ordered(row['attack_mode'] for row in rows)
    width = 0.8 / len(modes)
    fig, ax = plt.subplots(figsize=(6, 4))
    positions = np.arange(len(planners))
    for m, mode in enumerate(modes):
        means, errors = [], []
        for name in planners:
            values = [row[metric] for row in rows
                      if row['planner'] == name and row['attack_mode'] == mode]
            means.append(np.mean(values) if values else np.nan)
            errors.append(np.std(values, ddof=1) if len(values) > 1 else 0.0)
        ax.bar(positions + (m - (len(modes) - 1) / 2) * width, means, width,
               yerr=errors, capsize=3, label=mode)
    ax.set_xticks(positions)
    ax.set_xticklabels(planners)
    ax.set_ylabel(metric)
    ax.set_title(title)
    ax.legend()
    fig.tight_layout()
    return fig, ax


def emit_plots(csv_path, out_dir):
    """One SVG per (metric, budget). Returns the written paths."""
    rows = readTrialRows(csv_path)
    if not rows:
        log.warning('no trial rows in %s, nothing to plot', csv_path)
        return []
    os.makedirs(out_dir, exist_ok=True)
    written = []
    budgets = ordered((row['alpha_s'], row['alpha_c']) for row in rows)
    for alpha_s, alpha_c in budgets:
        subset = [row for row in rows
                  if (row['alpha_s'], row['alpha_c']) == (alpha_s, alpha_c)]
        for metric in METRICS:
            title = '{} (alpha_s={}, alpha_c={})'.format(metric, alpha_s, alpha_c)
            fig, _ = build_figure(subset, metric, title)
            path = os.path.join(out_dir, '{}_as{}_ac{}.svg'.format(metric, alpha_s, alpha_c))
            fig.savefig(path, format='svg', metadata={'Date': None})
            plt.close(fig)
            written.append(path)
            log.info('plot: %s', path)
    return written
