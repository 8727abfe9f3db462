"""Randomized verification of the divergence inequalities.

Each suite draws instance ``i`` from the stream ``(seed, i)``, so a whole
report is a pure function of its arguments and any single instance can be
replayed from the seed and index printed next to it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterator

import numpy as np

from . import __version__, units
from .channel import Ensemble, Povm, induced_channel
from .coding import gallager_e0_sq, quantum_bound_E, sibson_mi
from .divergence import alpha_z_divergence, in_dpi_region
from .exceptions import ParameterError
from .holevo import holevo_renyi_check, optimal_z, quantum_renyi_bound, renyi_bound
from .sampler import (
    generator,
    hs_random_density,
    random_cptp,
    random_diagonal_ensemble,
    random_ensemble,
    random_povm,
)

TOL = 1e-9
ORDERING_TOL = 1e-10
DEFAULT_ALPHAS = (0.3, 0.5, 0.7, 1.5, 2.0, 3.0)
ORDERING_ALPHAS = (0.3, 0.7, 1.5, 3.0)
ORDERING_Z = np.geomspace(0.25, 4.0, 50)
S_VALUES = tuple(round(0.1 * k, 1) for k in range(1, 11))


def fmt(x) -> str:
    """12 significant digits, locale independent; infinities as ``inf``."""
    if isinstance(x, (float, np.floating)):
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            return "nan"
        return f"{float(x) + 0.0:.12g}"
    return str(x)


@dataclass
class Check:
    index: int
    slack: float
    tol: float
    params: dict
    advisory: bool = False

    @property
    def failed(self) -> bool:
        return not self.slack >= -self.tol

    def line(self, kind: str) -> str:
        extras = " ".join(f"{k}={fmt(v)}" for k, v in self.params.items())
        return f"{kind} index={self.index} slack={fmt(self.slack)} {extras}".rstrip()


@dataclass
class FuzzReport:
    suite: str
    n: int
    dim: int
    seed: int
    checks: list[Check] = field(default_factory=list)

    @property
    def violations(self) -> list[Check]:
        return [c for c in self.checks if c.failed and not c.advisory]

    @property
    def anomalies(self) -> list[Check]:
        return [c for c in self.checks if c.failed and c.advisory]

    @property
    def worst(self) -> Check | None:
        return min(self.checks, key=lambda c: c.slack, default=None)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        out = [
            f"# suite={self.suite} n={self.n} dim={self.dim} seed={self.seed} "
            f"log_base={units.base_label()} version={__version__}"
        ]
        out += [c.line("violation") for c in self.violations]
        out += [c.line("anomaly") for c in self.anomalies]
        w = self.worst
        out.append(
            f"summary checks={len(self.checks)} violations={len(self.violations)} "
            f"anomalies={len(self.anomalies)} min_slack={fmt(w.slack) if w else 'nan'} "
            f"worst_seed={self.seed} worst_index={w.index if w else -1}"
        )
        return "\n".join(out) + "\n"


def sample_region_point(rng: np.random.Generator) -> tuple[float, float]:
    """Uniform-ish draw of ``(alpha, z)`` inside the data-processing region."""
    if rng.random() < 0.5:
        alpha = rng.uniform(0.05, 0.95)
        lo = max(alpha, 1 - alpha)
        hi = lo + 2.0
    else:
        alpha = rng.uniform(1.05, 4.0)
        lo, hi = (alpha / 2, alpha) if alpha <= 2 else (alpha - 1, alpha)
    return float(alpha), float(rng.uniform(lo, hi))


def _dpi(n, dim, seed, opts) -> Iterator[Check]:
    for i in range(n):
        rng = generator(seed, i)
        rho = hs_random_density(dim, dim, rng)
        sigma = hs_random_density(dim, dim, rng)
        phi = random_cptp(dim, int(rng.integers(1, 4)), rng)
        alpha, z = sample_region_point(rng)
        if opts.get("alpha") is not None:
            alpha = opts["alpha"]
            z = opts["z"] if opts.get("z") is not None else optimal_z(alpha)
        before = alpha_z_divergence(rho, sigma, alpha, z)
        after = alpha_z_divergence(phi(rho), phi(sigma), alpha, z)
        yield Check(i, before - after, TOL, {"alpha": alpha, "z": z})


def _ordering(n, dim, seed, opts) -> Iterator[Check]:
    alphas = (opts["alpha"],) if opts.get("alpha") is not None else ORDERING_ALPHAS
    for i in range(n):
        rng = generator(seed, i)
        rho = hs_random_density(dim, dim, rng)
        sigma = hs_random_density(dim, dim, rng)
        for alpha in alphas:
            vals = np.array([alpha_z_divergence(rho, sigma, alpha, z) for z in ORDERING_Z])
            steps = np.diff(vals)
            # non-increasing in z for alpha > 1, non-decreasing for alpha < 1
            margins = -steps if alpha > 1 else steps
            k = int(np.argmin(margins))
            yield Check(i, float(margins[k]), ORDERING_TOL, {"alpha": alpha, "z": float(ORDERING_Z[k])})


def sample_channel_instance(rng, dim, opts) -> tuple[Ensemble, Povm, bool]:
    """Random ensemble/POVM pair; every fourth draw is a commuting instance."""
    letters = opts.get("letters") or int(rng.integers(1, 5))
    if rng.random() < 0.25:
        return random_diagonal_ensemble(letters, dim, rng), Povm.computational(dim), True
    outcomes = opts.get("outcomes") or int(rng.integers(1, 6))
    return random_ensemble(letters, dim, rng), random_povm(dim, outcomes, rng), False


def _alphas(opts):
    return (opts["alpha"],) if opts.get("alpha") is not None else DEFAULT_ALPHAS


def _holevo_renyi(n, dim, seed, opts) -> Iterator[Check]:
    for i in range(n):
        rng = generator(seed, i)
        e, m, commuting = sample_channel_instance(rng, dim, opts)
        for alpha in _alphas(opts):
            z = opts["z"] if opts.get("z") is not None else optimal_z(alpha)
            rep = holevo_renyi_check(e, m, alpha, z)
            params = {"alpha": alpha, "z": z, "letters": len(e), "outcomes": len(m)}
            yield Check(i, rep.slack, TOL, params)
            if commuting:
                yield Check(i, -abs(rep.slack), TOL, {**params, "equality": 1})


def _renyi_bound(n, dim, seed, opts) -> Iterator[Check]:
    for i in range(n):
        rng = generator(seed, i)
        e, m, _ = sample_channel_instance(rng, dim, opts)
        for alpha in _alphas(opts):
            rep = renyi_bound(e, m, alpha)
            yield Check(i, rep.slack, TOL, {"alpha": alpha, "letters": len(e)}, advisory=alpha > 1)


def _sibson_bound(n, dim, seed, opts) -> Iterator[Check]:
    for i in range(n):
        rng = generator(seed, i)
        e, m, _ = sample_channel_instance(rng, dim, opts)
        w = induced_channel(e, m)
        for alpha in _alphas(opts):
            lhs = sibson_mi(e.prior, w, alpha)
            rhs = quantum_renyi_bound(e, alpha)
            yield Check(i, rhs - lhs, TOL, {"alpha": alpha, "letters": len(e)})


def _proposition(n, dim, seed, opts) -> Iterator[Check]:
    for i in range(n):
        rng = generator(seed, i)
        e, m, _ = sample_channel_instance(rng, dim, opts)
        w = induced_channel(e, m)
        for s in S_VALUES:
            lhs = gallager_e0_sq(e.prior, w, s)
            rhs = quantum_bound_E(e, s)
            yield Check(i, rhs - lhs, TOL, {"s": s, "letters": len(e)})


SUITES: dict[str, Callable] = {
    "dpi": _dpi,
    "ordering": _ordering,
    "holevo_renyi": _holevo_renyi,
    "renyi_bound": _renyi_bound,
    "sibson_bound": _sibson_bound,
    "proposition": _proposition,
}


def run_suite(suite: str, n: int, dim: int, seed: int, **opts) -> FuzzReport:
    """Run ``suite`` on ``n`` random instances of dimension ``dim``.

    Options: ``alpha`` and ``z`` force the parameters (``z`` must lie in the
    data-processing region for suites that need it), ``letters`` and
    ``outcomes`` fix the alphabet sizes.
    """
    if suite not in SUITES:
        raise ParameterError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not 2 <= dim <= 8:
        raise ParameterError(f"dim must lie in [2, 8], got {dim}")
    alpha, z = opts.get("alpha"), opts.get("z")
    if alpha is not None and z is not None and suite in ("dpi", "holevo_renyi") and not in_dpi_region(alpha, z):
        raise ParameterError(f"(alpha, z) = ({alpha}, {z}) is outside the data-processing region")
    report = FuzzReport(suite, n, dim, seed)
    report.checks.extend(SUITES[suite](n, dim, seed, opts))
    return report
