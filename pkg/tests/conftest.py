import numpy as np
import pytest

from renyi_holevo import sampler


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_pair(seed, d=3, rank=None):
    rho = sampler.hs_random_density(d, rank, seed, stream=0)
    sigma = sampler.hs_random_density(d, d, seed, stream=1)
    return rho, sigma


def ket(*amps):
    v = np.asarray(amps, dtype=complex)
    return np.outer(v, v.conj())


# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[k])
