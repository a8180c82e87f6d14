import json

import pytest

from services.verification_suites import SUITES, VerificationSuiteService
from utils.config_service import ConfigService
from utils.error_handler import SizeLimitError, ValidationError


@pytest.fixture(scope="module")
def suites():
    return VerificationSuiteService(ConfigService(overrides={'default_trials': 2}))


@pytest.mark.parametrize("name", list(SUITES))
def test_small_runs_pass(suites, name):
    report = suites.run(name, n=3, seed=7, trials=2)
    assert report.suite == name
    assert report.cases
    assert report.passed, [case.to_dict() for case in report.failures]
    data = json.loads(json.dumps(report.to_dict()))
    assert data['total'] == len(report.cases)


def test_parameters_are_recorded(suites):
    report = suites.run('lindstrom', n=3, seed=11, trials=2)
    assert report.to_dict()['parameters'] == {'n': 3, 'seed': 11, 'trials': 2}


def test_reruns_are_identical(suites):
    first = suites.run('lmw', n=3, seed=5, trials=3).to_dict()
    second = suites.run('lmw', n=3, seed=5, trials=3).to_dict()
    assert first == second


def test_known_counterexample_is_an_expected_divergence(suites):
    report = suites.run('stembridge-rect', n=4, seed=7, trials=1, known_counterexample=True)
    assert report.passed
    divergences = [case for case in report.cases if case.expected_divergence]
    assert len(divergences) == 1
    assert (divergences[0].expected, divergences[0].actual) == (7, 4)


def test_unknown_suite(suites):
    with pytest.raises(ValidationError):
        suites.run('no-such-suite')


def test_bad_parameters(suites):
    with pytest.raises(ValidationError):
        suites.run('kostka', n=0)
    with pytest.raises(ValidationError):
        suites.run('lindstrom', n=3, trials=0)
    with pytest.raises(ValidationError):
        suites.run('lindstrom', n=3, seed=-1)


def test_size_guard(suites):
    with pytest.raises(SizeLimitError):
        suites.run('muir', n=6)
    with pytest.raises(SizeLimitError):
        suites.run('eta-interpretations', n=9)


def test_default_sizes(suites):
    assert suites.default_n('uio') == 6
    assert suites.default_n('matrix') == 4
    assert suites.default_n('poset') == 5


@pytest.mark.slow
@pytest.mark.parametrize("name", ['eta-interpretations', 'psi-interpretations', 'trace-identities',
                                  'monomial-traces', 'uio-bijection', 'q-sums'])
def test_default_size_runs_pass(suites, name):
    report = suites.run(name, seed=7, trials=2)
    assert report.passed, [case.to_dict() for case in report.failures]
