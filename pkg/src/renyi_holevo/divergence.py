"""Classical and quantum Rényi divergences.

All divergences are returned as floats in the active log base (see
:mod:`renyi_holevo.units`); ``math.inf`` marks a support violation that forces
divergence.

The two-parameter family is built on the overlap

    f(rho || sigma) = Tr[(rho^(a/2z) sigma^((1-a)/z) rho^(a/2z))^z]

with ``d_{a,z} = log(f) / (a - 1)``. ``z = 1`` is the Petz-type Rényi relative
entropy, ``z = a`` the sandwiched one and ``z = 1 - a`` the reverse-sandwiched
one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import units
from .exceptions import ParameterError, ValidationError
from .matcore import (
    SUPPORT_CUTOFF,
    Support,
    _psd_spectrum,
    _support_mask,
    as_density_matrix,
    matrix_power,
    power_from_spectrum,
    spectral_decompose,
    supports_compatible,
)

PROB_TOL = 1e-10
REGION_EPS = 1e-12


def as_prob_vector(p, name: str = "p") -> np.ndarray:
    """Validate a probability vector; any shape is flattened."""
    v = np.asarray(p, dtype=float).ravel()
    if v.size == 0:
        raise ValidationError(f"{name} is empty")
    if not np.all(np.isfinite(v)):
        raise ValidationError(f"{name} has non-finite entries")
    if v.min() < 0:
        raise ValidationError(f"{name} has negative weight {v.min():.3e}")
    total = v.sum()
    if abs(total - 1.0) > PROB_TOL:
        raise ValidationError(f"{name} sums to {total!r}, expected 1 within {PROB_TOL:g}")
    return v


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not (alpha > 0 and math.isfinite(alpha)):
        raise ParameterError(f"alpha must be positive and finite, got {alpha}")
    if alpha == 1:
        raise ParameterError("alpha = 1 is excluded; use kl_divergence or umegaki_relative_entropy")
    return alpha


def _check_z(z: float) -> float:
    z = float(z)
    if not (z > 0 and math.isfinite(z)):
        raise ParameterError(f"z must be positive and finite, got {z}")
    return z


def in_dpi_region(alpha: float, z: float) -> bool:
    """Membership of ``(alpha, z)`` in the region where data processing holds.

    Either ``alpha < 1`` and ``z >= max(alpha, 1 - alpha)``, or
    ``1 < alpha <= 2`` and ``alpha/2 <= z <= alpha``, or ``alpha >= 2`` and
    ``alpha - 1 <= z <= alpha``.

    The inclusive bounds carry a ``1e-12`` slack so that decimal grid points
    lying exactly on the boundary (``1 - 0.18`` vs ``0.82``) are classified as
    members; ``alpha = 1`` is always excluded.
    """
    eps = REGION_EPS
    if alpha < 1:
        return z >= max(alpha, 1 - alpha) - eps
    if 1 < alpha <= 2 + eps and alpha / 2 - eps <= z <= alpha + eps:
        return True
    return alpha >= 2 - eps and alpha - 1 - eps <= z <= alpha + eps


@dataclass(frozen=True)
class AlphaZ:
    alpha: float
    z: float
    in_region: bool = field(init=False)

    def __post_init__(self):
        _check_alpha(self.alpha)
        _check_z(self.z)
        object.__setattr__(self, "in_region", in_dpi_region(self.alpha, self.z))


def _overlap_to_divergence(f: float, alpha: float, base) -> float:
    if f == math.inf:
        return math.inf
    if f <= 0:
        # alpha < 1 with orthogonal supports
        return math.inf
    return float(units.log(f, base)) / (alpha - 1)


def classical_overlap(p, q, alpha: float) -> float:
    """``sum_x p^alpha q^(1-alpha)`` with explicit boundary conventions.

    Terms with ``p(x) = 0`` vanish. A term with ``p(x) > 0, q(x) = 0`` vanishes
    for ``alpha < 1`` and makes the sum infinite for ``alpha > 1``.
    """
    alpha = _check_alpha(alpha)
    p = np.asarray(p, dtype=float).ravel()
    q = np.asarray(q, dtype=float).ravel()
    if p.shape != q.shape:
        raise ValidationError(f"alphabet mismatch: {p.size} vs {q.size}")
    live = p > 0
    if alpha > 1 and np.any(live & (q <= 0)):
        return math.inf
    both = live & (q > 0)
    return float(np.sum(p[both] ** alpha * q[both] ** (1 - alpha)))


def renyi_classical(p, q, alpha: float, base=None) -> float:
    p = as_prob_vector(p, "p")
    q = as_prob_vector(q, "q")
    return _overlap_to_divergence(classical_overlap(p, q, alpha), alpha, base)


def kl_divergence(p, q, base=None) -> float:
    p = as_prob_vector(p, "p")
    q = as_prob_vector(q, "q")
    if p.shape != q.shape:
        raise ValidationError(f"alphabet mismatch: {p.size} vs {q.size}")
    live = p > 0
    if np.any(live & (q <= 0)):
        return math.inf
    return float(np.sum(p[live] * units.log(p[live] / q[live], base)))


def shannon_entropy(p, base=None) -> float:
    p = np.asarray(p, dtype=float).ravel()
    live = p[p > 0]
    return float(abs(-np.sum(live * units.log(live, base))))


def alpha_z_overlap(rho, sigma, alpha: float, z: float) -> float:
    """``Tr[(rho^(a/2z) sigma^((1-a)/z) rho^(a/2z))^z]``.

    Returns ``inf`` for ``alpha > 1`` when ``supp rho`` is not inside
    ``supp sigma``; for ``alpha < 1`` orthogonal supports give ``0``.
    """
    alpha = _check_alpha(alpha)
    z = _check_z(z)
    rho = as_density_matrix(rho)
    sigma = as_density_matrix(sigma)
    if rho.shape != sigma.shape:
        raise ValidationError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    rs, ss = _psd_spectrum(rho), _psd_spectrum(sigma)
    if alpha > 1 and not _contained(rho, ss):
        return math.inf
    x = power_from_spectrum(rs, alpha / (2 * z)) @ power_from_spectrum(ss, (1 - alpha) / (2 * z))
    return gram_trace_power(x, z)


def _contained(rho, sigma_spec) -> bool:
    # same test as supports_compatible(...) is Support.CONTAINED
    w, v = sigma_spec
    comp = v[:, ~_support_mask(w)]
    return comp.shape[1] == 0 or np.max(np.abs(comp.conj().T @ rho @ comp)) <= 1e-10


def gram_trace_power(x: np.ndarray, t: float) -> float:
    """``Tr[(X X^H)^t]`` from the singular values of ``X``.

    Avoids forming ``X X^H``, whose small eigenvalues would carry absolute
    noise of order ``eps * max`` that powers ``t < 1`` amplify.
    """
    sv = np.linalg.svd(x, compute_uv=False)
    top = sv.max() if sv.size else 0.0
    if top <= 0:
        return 0.0
    sv = sv[sv > SUPPORT_CUTOFF * top]
    return float(np.sum(sv ** (2 * t)))


def trace_power(m: np.ndarray, t: float) -> float:
    """``Tr[m^t]`` for PSD ``m``, summing over its support."""
    w = np.linalg.eigvalsh(0.5 * (m + m.conj().T))
    top = w.max()
    if top <= 0:
        return 0.0
    w = w[w > SUPPORT_CUTOFF * top]
    return float(np.sum(w**t))


def alpha_z_divergence(rho, sigma, alpha: float, z: float, base=None) -> float:
    return _overlap_to_divergence(alpha_z_overlap(rho, sigma, alpha, z), alpha, base)


def sandwiched_divergence(rho, sigma, alpha: float, base=None) -> float:
    return alpha_z_divergence(rho, sigma, alpha, alpha, base)


def renyi_relative_entropy(rho, sigma, alpha: float, base=None) -> float:
    """``log(Tr[rho^a sigma^(1-a)]) / (a - 1)`` for ``a`` in (0, 1).

    Evaluated as a plain product trace, independently of the sandwich used by
    :func:`alpha_z_overlap`. For ``a > 1`` call ``alpha_z_divergence(..., z=1)``.
    """
    alpha = _check_alpha(alpha)
    if not 0 < alpha < 1:
        raise ParameterError(f"renyi_relative_entropy is defined for alpha in (0, 1), got {alpha}")
    rho = as_density_matrix(rho)
    sigma = as_density_matrix(sigma)
    if rho.shape != sigma.shape:
        raise ValidationError(f"dimension mismatch: {rho.shape} vs {sigma.shape}")
    tr = float(np.real(np.trace(matrix_power(rho, alpha) @ matrix_power(sigma, 1 - alpha))))
    return _overlap_to_divergence(max(tr, 0.0), alpha, base)


def fidelity(rho, sigma) -> float:
    """Uhlmann fidelity ``(Tr sqrt(sigma^1/2 rho sigma^1/2))^2``.

    Computed as the squared trace norm of ``sqrt(rho) sqrt(sigma)``.
    """
    rho = as_density_matrix(rho)
    sigma = as_density_matrix(sigma)
    s = np.linalg.svd(matrix_power(rho, 0.5) @ matrix_power(sigma, 0.5), compute_uv=False)
    return float(min(np.sum(s) ** 2, 1.0))


def von_neumann_entropy(rho, base=None) -> float:
    rho = as_density_matrix(rho)
    return shannon_entropy(np.clip(np.linalg.eigvalsh(rho), 0.0, None), base)


def umegaki_relative_entropy(rho, sigma, base=None) -> float:
    """``Tr[rho (log rho - log sigma)]``; ``inf`` unless ``supp rho`` lies in ``supp sigma``."""
    rho = as_density_matrix(rho)
    sigma = as_density_matrix(sigma)
    if supports_compatible(rho, sigma) is not Support.CONTAINED:
        return math.inf
    a, va = spectral_decompose(rho)
    b, vb = spectral_decompose(sigma)
    a = np.clip(a, 0.0, None)
    keep_a = a > SUPPORT_CUTOFF * a.max()
    keep_b = b > SUPPORT_CUTOFF * b.max()
    overlap = np.abs(va[:, keep_a].conj().T @ vb[:, keep_b]) ** 2
    a = a[keep_a]
    cross = a @ overlap @ units.log(b[keep_b], base)
    value = float(np.sum(a * units.log(a, base)) - cross)
    return max(value, 0.0)


def alternate_distance(rho, sigma, alpha: float, z: float) -> float:
    """``f - 1`` for ``alpha > 1`` and ``1 - f`` for ``alpha < 1``.

    Only meaningful inside the data-processing region, where it is a monotone,
    nonnegative distance; outside the region a ``ParameterError`` is raised.
    """
    alpha = _check_alpha(alpha)
    z = _check_z(z)
    if not in_dpi_region(alpha, z):
        raise ParameterError(f"(alpha, z) = ({alpha}, {z}) is outside the data-processing region")
    f = alpha_z_overlap(rho, sigma, alpha, z)
    return f - 1 if alpha > 1 else 1 - f
