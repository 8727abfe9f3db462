"""Reproducible random states, measurements and channels.

Every sampler takes ``seed`` as either an integer or a ready
``numpy.random.Generator``. Integers are combined with ``stream`` into a
Philox (counter-based) generator, so ``(seed, stream)`` pins the draw no
matter how work is split across processes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import Ensemble, Povm
from .exceptions import DomainError, ParameterError, ValidationError
from .matcore import as_density_matrix, matrix_power

KRAUS_TOL = 1e-9


def generator(seed, stream: int = 0) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    ss = np.random.SeedSequence(int(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.Philox(ss))


def ginibre(shape, rng: np.random.Generator) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def haar_isometry(rows: int, cols: int, seed, stream: int = 0) -> np.ndarray:
    """Haar-random isometry via QR, with R's diagonal made real positive."""
    rng = generator(seed, stream)
    q, r = np.linalg.qr(ginibre((rows, cols), rng))
    ph = np.diag(r).copy()
    ph = np.where(np.abs(ph) > 0, ph / np.abs(ph), 1.0)
    return q * ph.conj()


def haar_unitary(d: int, seed, stream: int = 0) -> np.ndarray:
    return haar_isometry(d, d, seed, stream)


def haar_pure_state(d: int, seed, stream: int = 0) -> np.ndarray:
    if d < 1:
        raise ParameterError(f"dimension must be >= 1, got {d}")
    psi = ginibre(d, generator(seed, stream))
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def hs_random_density(d: int, rank: int | None = None, seed=0, stream: int = 0) -> np.ndarray:
    """Hilbert-Schmidt-type random state ``G G^H / Tr(G G^H)`` with ``G`` of shape (d, rank)."""
    rank = d if rank is None else rank
    if not 1 <= rank <= d:
        raise ParameterError(f"rank must lie in [1, {d}], got {rank}")
    g = ginibre((d, rank), generator(seed, stream))
    rho = g @ g.conj().T
    return as_density_matrix(rho / np.real(np.trace(rho)))


def random_povm(d: int, n_outcomes: int, seed=0, stream: int = 0) -> Povm:
    """Random POVM ``S^-1/2 A_y S^-1/2`` from Wishart operators ``A_y`` with ``S = sum A_y``."""
    if n_outcomes < 1:
        raise ParameterError(f"n_outcomes must be >= 1, got {n_outcomes}")
    if n_outcomes == 1:
        return Povm(np.eye(d, dtype=complex)[None])
    rng = generator(seed, stream)
    for _ in range(2):
        g = ginibre((n_outcomes, d, d), rng)
        a = g @ np.conj(np.swapaxes(g, 1, 2))
        s = a.sum(axis=0)
        w = np.linalg.eigvalsh(s)
        if w[0] > 1e-12 * w[-1]:
            break
    else:
        raise DomainError("random POVM normalisation is singular after resampling")
    s_inv = matrix_power(s, -0.5)
    elems = s_inv @ a @ s_inv
    elems = 0.5 * (elems + np.conj(np.swapaxes(elems, 1, 2)))
    return Povm(elems)


@dataclass(frozen=True, eq=False)
class KrausMap:
    """Completely positive trace-preserving map ``rho -> sum K rho K^H``."""

    operators: np.ndarray

    def __post_init__(self):
        ks = np.asarray(self.operators, dtype=complex)
        if ks.ndim == 2:
            ks = ks[None]
        if ks.ndim != 3:
            raise ValidationError(f"Kraus operators must form a (k, d_out, d_in) array, got {ks.shape}")
        resid = float(np.max(np.abs(np.einsum("kji,kjl->il", ks.conj(), ks) - np.eye(ks.shape[2]))))
        if resid > KRAUS_TOL:
            raise ValidationError(f"Kraus operators are not trace preserving: residual {resid:.3e}")
        object.__setattr__(self, "operators", ks)

    def __call__(self, rho) -> np.ndarray:
        return apply(self, rho)


def apply(channel: KrausMap, rho) -> np.ndarray:
    ks = channel.operators
    out = np.einsum("kij,jl,kml->im", ks, np.asarray(rho, dtype=complex), ks.conj())
    return as_density_matrix(0.5 * (out + out.conj().T))


def random_cptp(d: int, kraus_count: int, seed=0, stream: int = 0) -> KrausMap:
    """Random channel from a Haar isometry ``C^d -> C^(d k)`` cut into ``k`` blocks."""
    if kraus_count < 1:
        raise ParameterError(f"kraus_count must be >= 1, got {kraus_count}")
    v = haar_isometry(d * kraus_count, d, seed, stream)
    return KrausMap(v.reshape(kraus_count, d, d))


def depolarizing_map(d: int) -> KrausMap:
    """Completely depolarizing channel, ``rho -> I/d``."""
    ks = np.zeros((d * d, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            ks[i * d + j, i, j] = 1 / np.sqrt(d)
    return KrausMap(ks)


def random_ensemble(n_letters: int, d: int, seed=0, stream: int = 0, rank: int | None = None) -> Ensemble:
    """Ensemble with a Dirichlet(1) prior and Hilbert-Schmidt states.

    ``rank=None`` draws each state's rank uniformly from 1..d.
    """
    rng = generator(seed, stream)
    prior = rng.dirichlet(np.ones(n_letters))
    states = []
    for _ in range(n_letters):
        r = int(rng.integers(1, d + 1)) if rank is None else rank
        states.append(hs_random_density(d, r, rng))
    return Ensemble(prior, states)


def random_diagonal_ensemble(n_letters: int, d: int, seed=0, stream: int = 0) -> Ensemble:
    """Ensemble of commuting (diagonal) states."""
    rng = generator(seed, stream)
    prior = rng.dirichlet(np.ones(n_letters))
    states = [np.diag(rng.dirichlet(np.ones(d))).astype(complex) for _ in range(n_letters)]
    return Ensemble(prior, states)
