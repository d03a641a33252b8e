# -*- coding: utf-8 -*-
import pytest

from spin_entangle.errors import ConfigError
from spin_entangle.verify import SUITE_NAMES, SUITES, SuiteResult, run_suite, run_suites


@pytest.mark.parametrize("name", list(SUITES))
def test_suite_passes(name):
    result = run_suite(name, trials=40, seed=20031)
    assert isinstance(result, SuiteResult)
    assert result.name == name
    assert result.trials == 40
    assert result.passed, result.details
    assert result.to_dict()['status'] == 'sucesso'


def test_ising_suite_reports_counts():
    details = run_suite('ising', trials=60).details
    assert details.get('largest_symmetric', 0) + details.get('largest_other', 0) == 60
    assert 'worst_by_check' in details


def test_u1_suite_hits_valid_branch():
    assert run_suite('u1', trials=60).details.get('branch_valid', 0) > 0


def test_conditions_negative_control():
    details = run_suite('conditions', trials=20).details
    assert details['negative_control_residual'] >= 1e-4
    assert len(details['tfim_grid']) == 10


def test_unknown_suite():
    with pytest.raises(ConfigError):
        run_suite('nenhuma')


def test_trials_must_be_positive():
    with pytest.raises(ConfigError):
        run_suite('z2', trials=0)


def test_all_runs_every_suite():
    results = run_suites('all', trials=10)
    assert [r.name for r in results] == list(SUITES)
    assert len(results) == 7
    assert SUITE_NAMES[-1] == 'all'


def test_deterministic():
    a = run_suite('wootters', trials=25, seed=3).to_dict()
    b = run_suite('wootters', trials=25, seed=3).to_dict()
    assert a == b
