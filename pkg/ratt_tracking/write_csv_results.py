"""CSV emission for campaigns, certification runs, attack evaluations and
CAA queries."""
import csv

import numpy as np

from . import ascii_ops
from . import tracking_const

TRIAL_COLUMNS = [
    'row_type', 'planner', 'attack_mode', 'trial', 'alpha_s', 'alpha_c',
    'alpha_cs', 'avg_trace', 'mse', 'phi', 'evals', 'blocked_edges',
]
STAT_COLUMNS = ['alpha_cs', 'avg_trace', 'mse', 'phi', 'evals', 'blocked_edges']
WALL_TIME = 'wall_time'

CERTIFICATE_COLUMNS = [
    'trial', 'alpha_s', 'alpha_c', 'alpha_cs', 'ratt_value', 'opt_value',
    'ratio', 'c_phi', 'bound', 'satisfied', 'k_phi', 'k_bound', 'k_satisfied',
]
ATTACK_COLUMNS = [
    'trial', 'planner', 'alpha_s', 'alpha_c', 'alpha_cs', 'worst_value',
    'worst_sensing', 'worst_edges', 'bounded_value', 'bounded_sensing',
    'bounded_edges', 'even_split_value', 'attack_count',
]
CAA_COLUMNS = ['n', 'alpha_c', 'e_r', 'n_max', 'alpha_cs', 'ebar']


def newWriter(stream):
    return csv.writer(stream, lineterminator='\n')


def cells(values):
    return ['' if value is None else ascii_ops.formatCell(value) for value in values]


def writeMetadata(stream, meta):
    stream.write('# schema_version={}\n'.format(tracking_const.CSV_SCHEMA_VERSION))
    for key, value in meta:
        stream.write('# {}={}\n'.format(key, value))


def trialRow(record, wallTime):
    row = ['trial', record.planner, record.attack_mode, record.trial,
           record.alpha_s, record.alpha_c, record.alpha_cs,
           float(record.avg_trace), float(record.mse), float(record.phi),
           record.evals, record.blocked_edges]
    if wallTime:
        row.append(float(record.wall_time))
    return row


def summaryRows(records, wallTime):
    """Mean and sample standard deviation per (planner, mode, budget)."""
    groups = {}
    for record in records:
        key = (record.planner, record.attack_mode, record.alpha_s, record.alpha_c)
        groups.setdefault(key, []).append(record)
    columns = STAT_COLUMNS + ([WALL_TIME] if wallTime else [])
    rows = []
    for (planner, mode, alpha_s, alpha_c), group in groups.items():
        values = np.array([[float(getattr(record, column)) for column in columns]
                           for record in group])
        mean = values.mean(axis=0)
        if len(group) > 1:
            std = values.std(axis=0, ddof=1)
        else:
            std = np.full(len(columns), np.nan)
        for label, stats in (('mean', mean), ('std', std)):
            rows.append([label, planner, mode, len(group), alpha_s, alpha_c]
                        + [float(value) for value in stats])
    return rows


def writeCampaign(stream, records, meta=(), wallTime=False):
    writeMetadata(stream, meta)
    writer = newWriter(stream)
    writer.writerow(TRIAL_COLUMNS + ([WALL_TIME] if wallTime else []))
    for record in records:
        writer.writerow(cells(trialRow(record, wallTime)))
    for row in summaryRows(records, wallTime):
        writer.writerow(cells(row))


def writeCampaignFile(filename, records, meta=(), wallTime=False):
    with open(filename, 'w', encoding=tracking_const.ENCODING_WRITE, newline='') as file:
        writeCampaign(file, records, meta, wallTime)


def writeCertificates(stream, rows, header=True):
    """`rows` are (trial, alpha_s, alpha_c, BoundCertificate)."""
    writer = newWriter(stream)
    if header:
        writer.writerow(CERTIFICATE_COLUMNS)
    for trial, alpha_s, alpha_c, cert in rows:
        writer.writerow(cells([
            trial, alpha_s, alpha_c, cert.alpha_cs, cert.achieved, cert.optimal,
            cert.ratio, cert.c_phi, cert.bound, cert.satisfied, cert.k_phi,
            cert.k_bound, cert.k_satisfied]))


def writeAttackEvaluations(stream, rows, header=True):
    writer = newWriter(stream)
    if header:
        writer.writerow(ATTACK_COLUMNS)
    for row in rows:
        writer.writerow(cells(row))


def writeCaaRow(stream, n, alpha_c, result, header=True):
    writer = newWriter(stream)
    if header:
        writer.writerow(CAA_COLUMNS)
    writer.writerow(cells([n, alpha_c, result.e_r, result.n_max, result.alpha_cs,
                           ';'.join(str(value) for value in result.ebar)]))
