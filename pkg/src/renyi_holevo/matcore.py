"""Hermitian spectral calculus: validation, eigendecomposition and powers on the support."""

from __future__ import annotations

import enum
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError, ValidationError

HERMITICITY_TOL = 1e-10
PSD_TOL = 1e-10
TRACE_TOL = 1e-10
SUPPORT_CUTOFF = 1e-12


class Spectrum(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


class Support(enum.Enum):
    CONTAINED = "contained"
    OVERLAPPING = "overlapping"
    ORTHOGONAL = "orthogonal"


def as_square(a) -> np.ndarray:
    """Coerce ``a`` to a finite square complex matrix."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim == 0:
        m = m.reshape(1, 1)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix has non-finite entries")
    return m


def as_hermitian(a, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate Hermiticity and return the exactly symmetrized matrix."""
    m = as_square(a)
    asym = float(np.max(np.abs(m - m.conj().T)))
    if asym > tol:
        raise ValidationError(f"matrix is not Hermitian: max |A - A^H| = {asym:.3e} > {tol:g}")
    return 0.5 * (m + m.conj().T)


def _phase_fix(vecs: np.ndarray) -> np.ndarray:
    # first component with modulus above noise made real positive
    mod = np.abs(vecs)
    idx = np.argmax(mod > 1e-12 * np.maximum(mod.max(axis=0), 1e-300), axis=0)
    c = vecs[idx, np.arange(vecs.shape[1])]
    phase = np.ones_like(c)
    nz = c != 0
    phase[nz] = np.abs(c[nz]) / c[nz]
    return vecs * phase


def spectral_decompose(a) -> Spectrum:
    """Eigendecomposition of a Hermitian matrix.

    Eigenvalues are ascending; each eigenvector is phase-fixed so that its first
    non-negligible component is real and positive, which makes the output
    reproducible run to run.
    """
    m = as_hermitian(a)
    w, v = np.linalg.eigh(m)
    return Spectrum(w, _phase_fix(v))


def _psd_spectrum(a) -> Spectrum:
    spec = spectral_decompose(a)
    lo = spec.eigenvalues[0]
    if lo < -PSD_TOL:
        raise DomainError(f"matrix is not positive semi-definite: eigenvalue {lo:.3e} < {-PSD_TOL:g}")
    return Spectrum(np.clip(spec.eigenvalues, 0.0, None), spec.eigenvectors)


def _support_mask(w: np.ndarray) -> np.ndarray:
    top = w.max() if w.size else 0.0
    if top <= 0:
        return np.zeros(w.shape, dtype=bool)
    return w > SUPPORT_CUTOFF * top


def power_from_spectrum(spec: Spectrum, t: float) -> np.ndarray:
    w, v = spec
    mask = _support_mask(w)
    f = np.zeros_like(w)
    f[mask] = w[mask] ** t
    out = (v * f) @ v.conj().T
    return 0.5 * (out + out.conj().T)


def matrix_power(a, t: float) -> np.ndarray:
    """``a**t`` for PSD ``a``, taken on the support only.

    Eigenvalues at or below ``1e-12 * max eigenvalue`` are mapped to zero, so
    negative exponents give the Moore-Penrose style generalized power.
    """
    if not np.isfinite(t):
        raise DomainError(f"exponent must be finite, got {t}")
    return power_from_spectrum(_psd_spectrum(a), float(t))


def support_projector(a) -> np.ndarray:
    w, v = _psd_spectrum(a)
    vs = v[:, _support_mask(w)]
    return vs @ vs.conj().T


def as_density_matrix(a) -> np.ndarray:
    """Validate a density matrix: Hermitian, PSD within tolerance, unit trace.

    Eigenvalues in ``[-1e-10, 0)`` are clipped to zero.
    """
    m = as_hermitian(a)
    tr = float(np.real(np.trace(m)))
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValidationError(f"density matrix trace is {tr!r}, expected 1 within {TRACE_TOL:g}")
    w, v = np.linalg.eigh(m)
    if w[0] < -PSD_TOL:
        raise ValidationError(f"density matrix has negative eigenvalue {w[0]:.3e}")
    if w[0] < 0:
        m = (v * np.clip(w, 0.0, None)) @ v.conj().T
        m = 0.5 * (m + m.conj().T)
    return m


def supports_compatible(rho, sigma) -> Support:
    """Classify how the support of ``rho`` sits relative to that of ``sigma``."""
    p_rho = support_projector(rho)
    p_sigma = support_projector(sigma)
    comp = np.eye(p_sigma.shape[0]) - p_sigma
    leak = comp @ np.asarray(rho) @ comp
    if np.max(np.abs(leak)) <= 1e-10:
        return Support.CONTAINED
    if abs(np.trace(p_rho @ p_sigma)) <= 1e-10:
        return Support.ORTHOGONAL
    return Support.OVERLAPPING
