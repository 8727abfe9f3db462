import math
import warnings

import numpy as np
import pytest

from renyi_holevo import sampler
from renyi_holevo.channel import Ensemble, Povm, induced_channel
from renyi_holevo.coding import (
    binary_pure_channel,
    burnashev_holevo_e0,
    capacity_alpha,
    charbit_cutoff,
    exponent_curve,
    gallager_e0_sq,
    max_gallager_e0,
    maximize_over_prior,
    quantum_bound_E,
    reliability_sq,
    sibson_mi,
)
from renyi_holevo.divergence import renyi_classical
from renyi_holevo.exceptions import OutsideValidityWarning, ParameterError
from renyi_holevo.holevo import f_sq

from conftest import ket


def bsc(eps):
    return np.array([[1 - eps, eps], [eps, 1 - eps]])


def sibson_oracle(p, w, alpha, grid=2001):
    """Definition as a minimum over output distributions, on a grid (binary outputs)."""
    joint = (w * p).T
    best = math.inf
    for t in np.linspace(1e-6, 1 - 1e-6, grid):
        q = np.array([t, 1 - t])
        best = min(best, renyi_classical(joint.ravel(), np.outer(p, q).ravel(), alpha))
    return best


def test_sibson_bsc_example():
    assert sibson_mi([0.5, 0.5], bsc(0.25), 2.0) == pytest.approx(math.log2(1.25), abs=1e-12)
    assert sibson_mi([0.5, 0.5], bsc(0.25), 2.0) == pytest.approx(0.321928, abs=1e-6)


@pytest.mark.parametrize("alpha", [0.3, 0.5, 2.0, 3.0])
@pytest.mark.parametrize("p0", [0.5, 0.2])
def test_sibson_matches_min_over_q(alpha, p0):
    p = np.array([p0, 1 - p0])
    w = np.array([[0.9, 0.3], [0.1, 0.7]])
    assert sibson_mi(p, w, alpha) == pytest.approx(sibson_oracle(p, w, alpha), abs=2e-3)
    assert sibson_mi(p, w, alpha) <= sibson_oracle(p, w, alpha) + 1e-12


def test_sibson_noiseless_and_useless():
    assert sibson_mi([0.5, 0.5], np.eye(2), 2.0) == pytest.approx(1.0, abs=1e-12)
    assert sibson_mi([0.3, 0.7], np.full((2, 2), 0.5), 0.5) == pytest.approx(0.0, abs=1e-12)


def test_capacity_noiseless():
    assert capacity_alpha(np.eye(3), 2.0) == pytest.approx(math.log2(3), abs=1e-9)


def test_capacity_symmetric_uniform_prior():
    value, prior = capacity_alpha(bsc(0.1), 1.5, return_prior=True)
    assert value == pytest.approx(sibson_mi([0.5, 0.5], bsc(0.1), 1.5), abs=1e-9)
    np.testing.assert_allclose(prior, [0.5, 0.5], atol=1e-4)


@pytest.mark.parametrize("alpha", [0.5, 2.0])
def test_capacity_matches_grid_oracle(alpha):
    w = np.array([[0.95, 0.2], [0.05, 0.8]])
    grid = max(sibson_mi([t, 1 - t], w, alpha) for t in np.linspace(0, 1, 20001))
    assert capacity_alpha(w, alpha) == pytest.approx(grid, abs=1e-8)
    assert capacity_alpha(w, alpha) >= grid - 1e-12


def test_gallager_examples():
    assert gallager_e0_sq([0.5, 0.5], np.eye(2), 1.0) == pytest.approx(1.0, abs=1e-12)
    assert gallager_e0_sq([0.5, 0.5], bsc(0.3), 0.0) == pytest.approx(0.0, abs=1e-12)
    # BSC cutoff rate: 1 - log2(1 + 2 sqrt(eps(1-eps)))
    eps = 0.1
    assert gallager_e0_sq([0.5, 0.5], bsc(eps), 1.0) == pytest.approx(1 - math.log2(1 + 2 * math.sqrt(eps * (1 - eps))), abs=1e-12)


def test_gallager_is_scaled_sibson():
    for i in range(30):
        e = sampler.random_ensemble(3, 3, seed=2, stream=i)
        w = induced_channel(e, sampler.random_povm(3, 4, seed=3, stream=i))
        for s in (0.1, 0.5, 1.0):
            assert gallager_e0_sq(e.prior, w, s) == pytest.approx(s * sibson_mi(e.prior, w, 1 / (1 + s)), abs=1e-10)


def test_max_gallager_e0():
    assert max_gallager_e0(bsc(0.1), 0.0) == 0.0
    assert max_gallager_e0(bsc(0.1), 1.0) == pytest.approx(gallager_e0_sq([0.5, 0.5], bsc(0.1), 1.0), abs=1e-9)


def test_reliability():
    w = bsc(0.1)
    cap = 1 - (-0.1 * math.log2(0.1) - 0.9 * math.log2(0.9))
    assert reliability_sq(w, cap + 0.01, restarts=4) == 0.0
    assert reliability_sq(w, 0.0, restarts=4) == pytest.approx(max_gallager_e0(w, 1.0), abs=1e-9)
    vals = [reliability_sq(w, r, restarts=4, grid=32) for r in (0.0, 0.1, 0.2, 0.3, 0.4)]
    assert all(a >= b - 1e-12 for a, b in zip(vals, vals[1:]))


def test_reliability_accepts_ensemble_povm_pair():
    e = Ensemble.uniform([ket(1, 0), ket(0, 1)])
    assert reliability_sq((e, Povm.computational(2)), 0.0, restarts=2, grid=16) == pytest.approx(1.0, abs=1e-9)


def test_quantum_bound_dominates_measured_exponent():
    for i in range(30):
        e = sampler.random_ensemble(3, 3, seed=4, stream=i)
        w = induced_channel(e, sampler.random_povm(3, 3, seed=5, stream=i))
        for s in (0.2, 0.6, 1.0):
            assert gallager_e0_sq(e.prior, w, s) <= quantum_bound_E(e, s) + 1e-9


def test_quantum_bound_consistent_with_f_sq():
    for i in range(20):
        e = sampler.random_ensemble(3, 3, seed=6, stream=i)
        for s in (0.1, 0.4, 1.0):
            alpha = 1 / (1 + s)
            assert quantum_bound_E(e, s) == pytest.approx(-(1 + s) * math.log2(f_sq(e, alpha)), abs=1e-12)


@pytest.mark.parametrize("c", [0.0, 0.25, 0.5, 0.9, 1.0])
def test_binary_pure_channel_closed_forms(c):
    e = binary_pure_channel(c).ensemble()
    closed = -math.log2((1 + c) / 2)
    assert quantum_bound_E(e, 1.0) == pytest.approx(closed, abs=1e-12)
    assert burnashev_holevo_e0(e, 1.0) == pytest.approx(closed, abs=1e-12)
    assert charbit_cutoff(e) == pytest.approx(-math.log2((1 + math.sqrt(c)) / 2), abs=1e-12)
    assert quantum_bound_E(e, 1.0) >= charbit_cutoff(e) - 1e-12


def test_binary_pure_channel_states():
    ch = binary_pure_channel(0.3)
    assert abs(np.vdot(ch.psi0, ch.psi1)) ** 2 == pytest.approx(0.3)
    assert ch.states.shape == (2, 2, 2)
    with pytest.raises(ParameterError):
        binary_pure_channel(1.5)


def test_charbit_warns_on_mixed_states():
    e = Ensemble.uniform([np.eye(2) / 2, ket(1, 0)])
    with pytest.warns(OutsideValidityWarning):
        charbit_cutoff(e)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        charbit_cutoff(binary_pure_channel(0.4).ensemble())


def test_exponent_curves():
    e = binary_pure_channel(0.4).ensemble()
    s = np.linspace(0, 1, 5)
    a = exponent_curve("E_script", e, s)
    b = exponent_curve("E0_q", e, s)
    np.testing.assert_allclose(a.values, b.values, atol=1e-12)
    assert a.values[0] == pytest.approx(0.0, abs=1e-14)
    with pytest.raises(ParameterError):
        exponent_curve("E0_sq", e, s)
    with pytest.raises(ParameterError):
        exponent_curve("nope", e, s)


def test_maximize_over_prior_at_least_uniform():
    e = binary_pure_channel(0.3).ensemble()
    best = maximize_over_prior(lambda x: quantum_bound_E(x, 1.0), e)
    assert best >= quantum_bound_E(e, 1.0) - 1e-12


def test_s_out_of_range():
    with pytest.raises(ParameterError):
        gallager_e0_sq([0.5, 0.5], bsc(0.1), 1.5)
