"""Maximization over the probability simplex.

Projected gradient ascent with Armijo backtracking, started from the uniform
point and from random Dirichlet points; two-letter problems additionally get a
bounded scalar search over ``p = (t, 1 - t)``.
"""

from __future__ import annotations

from typing import Callable

import numpy as np
from scipy.optimize import minimize_scalar

from .sampler import generator


def project_to_simplex(v: np.ndarray) -> np.ndarray:
    """Euclidean projection onto ``{x >= 0, sum x = 1}`` (sort-based)."""
    v = np.asarray(v, dtype=float)
    u = np.sort(v)[::-1]
    css = np.cumsum(u) - 1
    k = np.arange(1, v.size + 1)
    rho = np.nonzero(u - css / k > 0)[0][-1]
    theta = css[rho] / (rho + 1)
    return np.maximum(v - theta, 0.0)


def _ascend(f, grad, x, tol, max_iter):
    fx = f(x)
    step = 1.0
    for _ in range(max_iter):
        g = grad(x)
        if not np.all(np.isfinite(g)):
            break
        while True:
            cand = project_to_simplex(x + step * g)
            fc = f(cand)
            if fc >= fx + 1e-4 * g @ (cand - x) or step < 1e-14:
                break
            step *= 0.5
        gain = fc - fx
        if gain > 0:
            x, fx = cand, fc
        if gain < tol:
            break
        step = min(step * 2.0, 1e6)
    return fx, x


def numerical_gradient(f: Callable, h: float = 1e-7) -> Callable:
    def grad(x):
        g = np.empty_like(x)
        for i in range(x.size):
            e = np.zeros_like(x)
            e[i] = h
            g[i] = (f(x + e) - f(x - e)) / (2 * h)
        return g

    return grad


def maximize_on_simplex(
    f: Callable,
    n: int,
    grad: Callable | None = None,
    restarts: int = 20,
    seed=0,
    tol: float = 1e-10,
    max_iter: int = 5000,
) -> tuple[float, np.ndarray]:
    """Best value of ``f`` over the ``n``-simplex found by multi-start ascent.

    The result is a lower bound on the true maximum (exact for concave ``f``
    up to ``tol``).
    """
    if n == 1:
        x = np.ones(1)
        return float(f(x)), x
    grad = grad or numerical_gradient(f)
    rng = generator(seed)
    starts = [np.full(n, 1.0 / n)] + [rng.dirichlet(np.ones(n)) for _ in range(restarts)]
    best = (-np.inf, starts[0])
    for x0 in starts:
        val, x = _ascend(f, grad, x0, tol, max_iter)
        if val > best[0]:
            best = (val, x)
    if n == 2:
        res = minimize_scalar(
            lambda t: -f(np.array([t, 1 - t])),
            bounds=(0.0, 1.0),
            method="bounded",
            options={"xatol": 1e-12},
        )
        for t in (res.x, 0.0, 1.0):
            x = np.array([t, 1 - t])
            val = f(x)
            if val > best[0]:
                best = (val, x)
    return float(best[0]), best[1]
