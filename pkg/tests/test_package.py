import logging

import ratt_tracking
from ratt_tracking.timing import profile, timing


def test_version():
    assert ratt_tracking.__version__ == '1.0.0'
    assert ratt_tracking.package_info['name'] == 'ratt-tracking'


def test_exports():
    assert ratt_tracking.plan_ratt is ratt_tracking.planner.plan_ratt
    assert ratt_tracking.worst_case_attack is ratt_tracking.adversary.worst_case_attack
    assert ratt_tracking.caa.caa(5, 7).n_max == 3


def test_timing_logs(caplog):
    @timing
    def add(a, b=1):
        return a + b

    with caplog.at_level(logging.INFO, logger='ratt_tracking.timing'):
        assert add(2, b=3) == 5
    assert 'add function took' in caplog.text
    assert add.__name__ == 'add'


def test_profile_passes_result(caplog):
    @profile
    def square(x):
        return x * x

    with caplog.at_level(logging.INFO, logger='ratt_tracking.timing'):
        assert square(4) == 16
    assert 'cumulative' in caplog.text
