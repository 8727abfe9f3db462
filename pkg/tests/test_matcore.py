import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from renyi_holevo import matcore
from renyi_holevo.exceptions import DomainError, ValidationError
from renyi_holevo.matcore import (
    Support,
    as_density_matrix,
    matrix_power,
    spectral_decompose,
    support_projector,
    supports_compatible,
)
from renyi_holevo.sampler import hs_random_density

from conftest import ket


def random_hermitian(rng, d):
    a = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return a + a.conj().T


def test_identity_spectrum():
    spec = spectral_decompose(np.eye(3))
    np.testing.assert_allclose(spec.eigenvalues, [1, 1, 1])


def test_diagonal_spectrum_ascending():
    spec = spectral_decompose(np.diag([1.0, -1.0]))
    np.testing.assert_allclose(spec.eigenvalues, [-1, 1])


def test_reconstruction_and_orthonormality(rng):
    a = random_hermitian(rng, 4)
    spec = spectral_decompose(a)
    v = spec.eigenvectors
    assert np.max(np.abs(spec.reconstruct() - a)) <= 1e-9 * (1 + np.max(np.abs(a)))
    assert np.max(np.abs(v.conj().T @ v - np.eye(4))) <= 1e-10
    assert np.all(np.diff(spec.eigenvalues) >= 0)


def test_phase_convention_and_determinism(rng):
    a = random_hermitian(rng, 5)
    s1, s2 = spectral_decompose(a), spectral_decompose(a.copy())
    assert np.array_equal(s1.eigenvalues, s2.eigenvalues)
    assert np.array_equal(s1.eigenvectors, s2.eigenvectors)
    for col in s1.eigenvectors.T:
        first = col[np.argmax(np.abs(col) > 1e-12)]
        assert abs(first.imag) < 1e-15 and first.real > 0


def test_non_hermitian_names_asymmetry():
    with pytest.raises(ValidationError, match="max \\|A - A\\^H\\|"):
        spectral_decompose(np.array([[0, 1], [0, 0]]))


def test_non_square_and_nonfinite_rejected():
    with pytest.raises(ValidationError):
        spectral_decompose(np.ones((2, 3)))
    with pytest.raises(ValidationError):
        spectral_decompose(np.array([[np.nan, 0], [0, 1]]))


def test_power_identity():
    np.testing.assert_allclose(matrix_power(np.eye(3), 0.37), np.eye(3), atol=1e-15)


def test_power_rank_deficient():
    np.testing.assert_allclose(matrix_power(np.diag([4.0, 0.0]), 0.5), np.diag([2.0, 0.0]), atol=1e-15)


def test_negative_power_on_support_only():
    np.testing.assert_allclose(matrix_power(np.diag([4.0, 0.0]), -0.5), np.diag([0.5, 0.0]), atol=1e-15)


def test_cube_root_composes(rng):
    rho = hs_random_density(4, 4, seed=3)
    r = matrix_power(rho, 1 / 3)
    assert np.max(np.abs(r @ r @ r - rho)) <= 1e-9


def test_power_rejects_negative_eigenvalue():
    with pytest.raises(DomainError):
        matrix_power(np.diag([1.0, -1e-6]), 0.5)


def test_power_tolerates_rounding_negatives():
    out = matrix_power(np.diag([1.0, -1e-12]), 0.5)
    np.testing.assert_allclose(out, np.diag([1.0, 0.0]))


def test_power_one_is_projected_input():
    rho = hs_random_density(4, 2, seed=7)
    assert np.max(np.abs(matrix_power(rho, 1) - rho @ support_projector(rho))) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(0, 2**32 - 1),
    rank=st.integers(1, 4),
    s=st.floats(-1.5, 2.0),
    t=st.floats(-1.5, 2.0),
)
def test_power_of_power(seed, rank, s, t):
    rho = hs_random_density(4, rank, seed=seed)
    lhs = matrix_power(matrix_power(rho, s), t)
    rhs = matrix_power(rho, s * t)
    if abs(s * t) < 1e-12 or abs(s) < 1e-12:
        return  # zero exponents reduce to the support projector on one side only
    scale = max(1.0, np.max(np.abs(rhs)))
    assert np.max(np.abs(lhs - rhs)) <= 1e-9 * scale


def test_support_projector_cases():
    np.testing.assert_allclose(support_projector(np.diag([0.5, 0.5, 0.0])), np.diag([1.0, 1.0, 0.0]), atol=1e-15)
    psi = ket(1, 1j) / 2
    np.testing.assert_allclose(support_projector(psi), psi, atol=1e-14)


def test_support_projector_idempotent():
    p = support_projector(hs_random_density(5, 2, seed=11))
    assert np.max(np.abs(p @ p - p)) <= 1e-10
    assert round(np.real(np.trace(p))) == 2


def test_supports_compatible():
    rho = hs_random_density(3, 3, seed=1)
    assert supports_compatible(rho, rho) is Support.CONTAINED
    assert supports_compatible(ket(1, 0), ket(0, 1)) is Support.ORTHOGONAL
    assert supports_compatible(ket(1, 0), np.eye(2) / 2) is Support.CONTAINED
    plus = ket(1, 1) / 2
    assert supports_compatible(plus, ket(1, 0)) is Support.OVERLAPPING


def test_density_matrix_validation():
    with pytest.raises(ValidationError, match="trace"):
        as_density_matrix(np.eye(2))
    with pytest.raises(ValidationError, match="negative eigenvalue"):
        as_density_matrix(np.diag([1.1, -0.1]))
    clipped = as_density_matrix(np.diag([1.0 + 5e-11, -5e-11]))
    assert np.linalg.eigvalsh(clipped).min() >= 0


def test_support_cutoff_is_relative():
    assert matcore.SUPPORT_CUTOFF == 1e-12
    tiny = np.diag([1e-20, 1e-20 * 1e-13])
    np.testing.assert_allclose(support_projector(tiny), np.diag([1.0, 0.0]))
