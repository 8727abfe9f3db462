"""Classical-quantum channels, measurements and the classical statistics they induce.

Conventions: a classical channel is a ``(n_outputs, n_inputs)`` array
``W[y, x]`` whose columns sum to one; a joint distribution is an
``(n_inputs, n_outputs)`` array ``P[x, y]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .divergence import as_prob_vector
from .exceptions import ValidationError
from .matcore import PSD_TOL, as_density_matrix, as_hermitian

COMPLETENESS_TOL = 1e-9
CHANNEL_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class Ensemble:
    """Prior over letters plus one density matrix per letter."""

    prior: np.ndarray
    states: np.ndarray
    labels: tuple = ()

    def __post_init__(self):
        prior = as_prob_vector(self.prior, "prior")
        states = [as_density_matrix(s) for s in self.states]
        if len(states) != prior.size:
            raise ValidationError(f"{len(states)} states for a prior of length {prior.size}")
        dims = {s.shape[0] for s in states}
        if len(dims) != 1:
            raise ValidationError(f"states have mixed dimensions {sorted(dims)}")
        labels = tuple(self.labels) if self.labels else tuple(range(prior.size))
        if len(labels) != prior.size:
            raise ValidationError("one label per letter is required")
        object.__setattr__(self, "prior", prior)
        object.__setattr__(self, "states", np.stack(states))
        object.__setattr__(self, "labels", labels)

    @classmethod
    def uniform(cls, states: Sequence) -> "Ensemble":
        n = len(states)
        return cls(np.full(n, 1.0 / n), states)

    def with_prior(self, prior) -> "Ensemble":
        return Ensemble(prior, self.states, self.labels)

    @property
    def dim(self) -> int:
        return self.states.shape[1]

    def __len__(self) -> int:
        return self.prior.size


@dataclass(frozen=True, eq=False)
class Povm:
    """Positive operators summing to the identity."""

    elements: np.ndarray

    def __post_init__(self):
        elems = [as_hermitian(m) for m in self.elements]
        if not elems:
            raise ValidationError("a POVM needs at least one element")
        dims = {m.shape[0] for m in elems}
        if len(dims) != 1:
            raise ValidationError(f"POVM elements have mixed dimensions {sorted(dims)}")
        for i, m in enumerate(elems):
            lo = np.linalg.eigvalsh(m)[0]
            if lo < -PSD_TOL:
                raise ValidationError(f"POVM element {i} has negative eigenvalue {lo:.3e}")
        elems = np.stack(elems)
        resid = float(np.max(np.abs(elems.sum(axis=0) - np.eye(elems.shape[1]))))
        if resid > COMPLETENESS_TOL:
            raise ValidationError(f"POVM elements do not sum to identity: residual {resid:.3e}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def computational(cls, d: int) -> "Povm":
        return cls(np.stack([np.diag(row) for row in np.eye(d)]).astype(complex))

    @classmethod
    def projective(cls, basis) -> "Povm":
        """Rank-one projectors onto the columns of a unitary ``basis``."""
        u = np.asarray(basis, dtype=complex)
        return cls(np.stack([np.outer(u[:, k], u[:, k].conj()) for k in range(u.shape[1])]))

    @property
    def dim(self) -> int:
        return self.elements.shape[1]

    def __len__(self) -> int:
        return self.elements.shape[0]


def check_channel(w) -> np.ndarray:
    w = np.asarray(w, dtype=float)
    if w.ndim != 2 or 0 in w.shape:
        raise ValidationError(f"channel must be a non-empty 2-D array, got shape {w.shape}")
    if not np.all(np.isfinite(w)) or w.min() < 0:
        raise ValidationError("channel entries must be finite and nonnegative")
    resid = float(np.max(np.abs(w.sum(axis=0) - 1)))
    if resid > CHANNEL_TOL:
        raise ValidationError(f"channel columns do not sum to 1: residual {resid:.3e}")
    return w


def _check_dims(e: Ensemble, m: Povm) -> None:
    if e.dim != m.dim:
        raise ValidationError(f"ensemble dimension {e.dim} != POVM dimension {m.dim}")


def induced_channel(e: Ensemble, m: Povm) -> np.ndarray:
    """``W[y, x] = Tr(rho_x M_y)``, with rounding-level negatives clipped to zero."""
    _check_dims(e, m)
    w = np.real(np.einsum("xij,yji->yx", e.states, m.elements))
    return np.clip(w, 0.0, 1.0)


def joint_distribution(e: Ensemble, m: Povm) -> np.ndarray:
    return e.prior[:, None] * induced_channel(e, m).T


def separable_distribution(e: Ensemble, m: Povm) -> np.ndarray:
    joint = joint_distribution(e, m)
    return np.outer(joint.sum(axis=1), joint.sum(axis=0))


def average_state(e: Ensemble) -> np.ndarray:
    avg = np.einsum("x,xij->ij", e.prior, e.states)
    return as_density_matrix(avg)
