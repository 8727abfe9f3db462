import math

import numpy as np
import pytest

from renyi_holevo.divergence import in_dpi_region
from renyi_holevo.exceptions import ParameterError
from renyi_holevo.fuzz import SUITES, Check, FuzzReport, fmt, run_suite, sample_region_point
from renyi_holevo.sampler import generator


def test_fmt():
    assert fmt(-0.0) == "0"
    assert fmt(math.inf) == "inf"
    assert fmt(1 / 3) == "0.333333333333"
    assert fmt(np.float64(2.0)) == "2"
    assert fmt(3) == "3"


def test_region_samples_are_members():
    rng = generator(0)
    for _ in range(2000):
        a, z = sample_region_point(rng)
        assert in_dpi_region(a, z)


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_clean_and_deterministic(suite):
    n = 8 if suite == "ordering" else 25
    a = run_suite(suite, n, 2, seed=11)
    b = run_suite(suite, n, 2, seed=11)
    assert a.ok, a.render()
    assert a.render() == b.render()
    assert a.checks


def test_forced_parameters():
    rep = run_suite("holevo_renyi", 10, 2, 0, alpha=0.7, z=1.0, letters=2, outcomes=3)
    assert rep.ok
    assert {c.params["alpha"] for c in rep.checks} == {0.7}
    assert {c.params["letters"] for c in rep.checks} == {2}


def test_report_render():
    r = FuzzReport("dpi", 2, 3, 5, [Check(0, 0.5, 1e-9, {"alpha": 2.0}), Check(1, -0.1, 1e-9, {"alpha": 3.0}, advisory=True)])
    text = r.render()
    assert text.startswith("# suite=dpi n=2 dim=3 seed=5 log_base=2")
    assert "anomaly index=1 slack=-0.1 alpha=3" in text
    assert r.ok
    assert text.rstrip().endswith("min_slack=-0.1 worst_seed=5 worst_index=1")


def test_bad_arguments():
    with pytest.raises(ParameterError):
        run_suite("nope", 1, 2, 0)
    with pytest.raises(ParameterError):
        run_suite("dpi", 0, 2, 0)
    with pytest.raises(ParameterError):
        run_suite("dpi", 1, 9, 0)
