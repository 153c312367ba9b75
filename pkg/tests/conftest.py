import pytest

from qstrange.curveio import load_curve
from qstrange.immersion import build_immersion
from qstrange.selftest import STANDARD_FIXTURES, fixture_path, random_case

CORPUS_SEED = 11
N_RANDOM = 20

# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE = {}


def standard_immersion(name):
    return build_immersion(load_curve(fixture_path(name)).to_curve())


@pytest.fixture(scope="session")
def standard():
    return {name.split(".")[0]: standard_immersion(name) for name in STANDARD_FIXTURES}


@pytest.fixture(scope="session")
def random_curves():
    return [random_case(CORPUS_SEED, k) for k in range(N_RANDOM)]


@pytest.fixture(scope="session")
def corpus(standard, random_curves):
    """Standard fixtures followed by random curves with 0..12 double points."""
    imms = list(standard.values())
    imms += [build_immersion(cf.to_curve()) for cf in random_curves]
    return imms


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}: {text}")
