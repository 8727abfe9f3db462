"""Sibson mutual information, Gallager-type exponents and their quantum bounds.

Exponents follow the active log base. ``E0_sq`` is the Gallager function of the
classical channel induced by a fixed letter-by-letter measurement; ``E_script``
is its measurement-independent quantum upper bound; ``E0_q`` is the
joint-measurement (Burnashev-Holevo) function for pure signal states.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from . import units
from .channel import Ensemble, Povm, average_state, check_channel, induced_channel
from .divergence import _check_alpha, as_prob_vector, gram_trace_power, trace_power
from .exceptions import OutsideValidityWarning, ParameterError, ValidationError
from .matcore import matrix_power
from .simplex import maximize_on_simplex


def _check_s(s: float) -> float:
    s = float(s)
    if not 0 <= s <= 1:
        raise ParameterError(f"s must lie in [0, 1], got {s}")
    return s


def _prior_and_channel(p, w):
    w = check_channel(w)
    p = as_prob_vector(p, "p")
    if p.size != w.shape[1]:
        raise ValidationError(f"prior has {p.size} letters, channel has {w.shape[1]} inputs")
    return p, w


def _sibson_sum(p, w, alpha):
    g = (w**alpha) @ p
    return float(np.sum(g ** (1 / alpha)))


def sibson_mi(p, w, alpha: float, base=None) -> float:
    """``alpha/(alpha-1) * log sum_y [sum_x p(x) W(y|x)^alpha]^(1/alpha)``."""
    alpha = _check_alpha(alpha)
    p, w = _prior_and_channel(p, w)
    return float(alpha / (alpha - 1) * units.log(_sibson_sum(p, w, alpha), base))


def _sibson_grad(w, alpha, base):
    wa = w**alpha
    scale = 1.0 / ((alpha - 1) * math.log(units.get_log_base() if base is None else base))

    def grad(p):
        g = wa @ p
        s = np.sum(g ** (1 / alpha))
        with np.errstate(divide="ignore"):
            weights = np.where(g > 0, g ** ((1 - alpha) / alpha), 0.0)
        return scale * (weights @ wa) / s

    return grad


def capacity_alpha(w, alpha: float, restarts: int = 20, seed=0, base=None, return_prior: bool = False):
    """Order-``alpha`` capacity ``max_p I_alpha(p, W)``.

    Multi-start projected gradient ascent; the value returned is the best prior
    found, hence a lower bound on the true maximum to within the stopping
    tolerance.
    """
    alpha = _check_alpha(alpha)
    w = check_channel(w)
    if base is not None:
        base = units._check(base)

    def f(p):
        return sibson_mi(_normalize(p), w, alpha, base)

    value, prior = maximize_on_simplex(f, w.shape[1], grad=_sibson_grad(w, alpha, base), restarts=restarts, seed=seed)
    return (value, prior) if return_prior else value


def _normalize(p):
    p = np.clip(p, 0.0, None)
    return p / p.sum()


def gallager_e0_sq(p, w, s: float, base=None) -> float:
    """``-log sum_y [sum_x p(x) W(y|x)^(1/(1+s))]^(1+s)``."""
    s = _check_s(s)
    p, w = _prior_and_channel(p, w)
    inner = (w ** (1 / (1 + s))) @ p
    return float(-units.log(np.sum(inner ** (1 + s)), base))


def _as_classical(channel) -> np.ndarray:
    if isinstance(channel, tuple):
        e, m = channel
        return induced_channel(e, m)
    return check_channel(channel)


def max_gallager_e0(channel, s: float, restarts: int = 20, seed=0, base=None) -> float:
    """``max_p E0_sq(s)``, using ``E0_sq(s) = s * I_{1/(1+s)}``."""
    s = _check_s(s)
    if s == 0:
        return 0.0
    return s * capacity_alpha(_as_classical(channel), 1 / (1 + s), restarts, seed, base)


def reliability_sq(channel, rate: float, restarts: int = 20, seed=0, base=None, grid: int = 64) -> float:
    """Random-coding exponent ``max_{0<=s<=1} {max_p E0_sq(s) - s R}``.

    ``channel`` is a classical ``W[y, x]`` array or an ``(Ensemble, Povm)``
    pair. The outer search scans ``grid`` points of ``s`` and refines around
    the best one with a bounded scalar search.
    """
    if rate < 0:
        raise ParameterError(f"rate must be nonnegative, got {rate}")
    w = _as_classical(channel)
    memo: dict[float, float] = {}

    def objective(s):
        s = float(s)
        if s not in memo:
            memo[s] = max_gallager_e0(w, s, restarts, seed, base) - s * rate
        return memo[s]

    s_grid = np.linspace(0.0, 1.0, grid)
    vals = [objective(s) for s in s_grid]
    k = int(np.argmax(vals))
    best = vals[k]
    lo, hi = s_grid[max(k - 1, 0)], s_grid[min(k + 1, grid - 1)]
    if hi > lo:
        res = minimize_scalar(lambda s: -objective(s), bounds=(lo, hi), method="bounded", options={"xatol": 1e-9})
        best = max(best, -res.fun)
    return max(best, 0.0)


def quantum_bound_E(e: Ensemble, s: float, base=None) -> float:
    """``-(1+s) log sum_x p(x) Tr[(rho_bar^(s/2) rho_x rho_bar^(s/2))^(1/(1+s))]``.

    Upper-bounds ``E0_sq(s)`` for every measurement. The Hermitian sandwich has
    the same trace as ``Tr[(rho_x rho_bar^s)^(1/(1+s))]``.
    """
    s = _check_s(s)
    half = matrix_power(average_state(e), s / 2)
    total = sum(
        p * gram_trace_power(matrix_power(rho, 0.5) @ half, 1 / (1 + s))
        for p, rho in zip(e.prior, e.states)
        if p > 0
    )
    return float(-(1 + s) * units.log(total, base))


def burnashev_holevo_e0(e: Ensemble, s: float, base=None) -> float:
    """``-log Tr[(sum_x p(x) rho_x^(1/(1+s)))^(1+s)]``."""
    s = _check_s(s)
    mix = sum(p * matrix_power(rho, 1 / (1 + s)) for p, rho in zip(e.prior, e.states) if p > 0)
    return float(-units.log(trace_power(mix, 1 + s), base))


def _quadratic_min(g: np.ndarray) -> float:
    n = g.shape[0]
    if n == 1:
        return float(g[0, 0])
    if n == 2:
        a, b, c = g[0, 0], g[1, 1], g[0, 1]
        curv = a + b - 2 * c
        cands = [0.0, 1.0]
        if curv > 0:
            cands.append(min(max((b - c) / curv, 0.0), 1.0))
        return float(min(t * t * a + (1 - t) ** 2 * b + 2 * t * (1 - t) * c for t in cands))
    value, _ = maximize_on_simplex(lambda p: -(p @ g @ p), n, grad=lambda p: -2 * g @ p)
    return -value


def charbit_cutoff(e: Ensemble, base=None) -> float:
    """Cutoff-rate bound ``-log min_p sum p_x p_x' sqrt(Tr rho_x rho_x')``.

    The prior of ``e`` is ignored (it is optimized over). The bound is known
    for pure signal states; mixed inputs produce an ``OutsideValidityWarning``.
    """
    states = e.states
    purity = np.real(np.einsum("xij,xji->x", states, states))
    if np.any(np.abs(purity - 1) > 1e-9):
        warnings.warn("cutoff bound evaluated on mixed states", OutsideValidityWarning, stacklevel=2)
    gram = np.real(np.einsum("xij,yji->xy", states, states))
    g = np.sqrt(np.clip(gram, 0.0, None))
    return float(-units.log(_quadratic_min(g), base))


@dataclass(frozen=True, eq=False)
class BinaryPureChannel:
    c: float
    psi0: np.ndarray
    psi1: np.ndarray

    @property
    def states(self) -> np.ndarray:
        return np.stack([np.outer(v, v.conj()) for v in (self.psi0, self.psi1)])

    def ensemble(self, prior=None) -> Ensemble:
        return Ensemble([0.5, 0.5] if prior is None else prior, self.states)


def binary_pure_channel(c: float) -> BinaryPureChannel:
    """Two pure qubit signals with squared overlap ``c``."""
    c = float(c)
    if not 0 <= c <= 1:
        raise ParameterError(f"overlap c must lie in [0, 1], got {c}")
    psi0 = np.array([1.0, 0.0], dtype=complex)
    psi1 = np.array([math.sqrt(c), math.sqrt(1 - c)], dtype=complex)
    return BinaryPureChannel(c, psi0, psi1)


EXPONENT_LABELS = ("E0_sq", "E_script", "E0_q")


@dataclass(frozen=True)
class ExponentCurve:
    label: str
    s: np.ndarray
    values: np.ndarray


def exponent_curve(label: str, e: Ensemble, s_grid, povm: Povm | None = None, base=None) -> ExponentCurve:
    s_grid = np.asarray(s_grid, dtype=float)
    if label == "E0_sq":
        if povm is None:
            raise ParameterError("E0_sq needs a POVM")
        w = induced_channel(e, povm)
        vals = [gallager_e0_sq(e.prior, w, s, base) for s in s_grid]
    elif label == "E_script":
        vals = [quantum_bound_E(e, s, base) for s in s_grid]
    elif label == "E0_q":
        vals = [burnashev_holevo_e0(e, s, base) for s in s_grid]
    else:
        raise ParameterError(f"unknown exponent {label!r}; expected one of {EXPONENT_LABELS}")
    return ExponentCurve(label, s_grid, np.array(vals))


def maximize_over_prior(fn, e: Ensemble, restarts: int = 5, seed=0) -> float:
    """``max_p fn(e.with_prior(p))`` by multi-start simplex search."""
    value, _ = maximize_on_simplex(lambda p: fn(e.with_prior(_normalize(p))), len(e), restarts=restarts, seed=seed)
    return value
