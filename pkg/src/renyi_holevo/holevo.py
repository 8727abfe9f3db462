"""Holevo quantities and the Holevo-Rényi inequality.

For an ensemble ``{p(x), rho_x}`` measured with a POVM ``{M_y}`` the classical
Rényi sum over the joint and product distributions is bounded by the averaged
overlap ``sum_x p(x) f_{a,z}(rho_x || rho_bar)``: from above when ``a > 1``,
from below when ``a < 1``. :func:`optimal_z` picks the ``z`` giving the tightest
of these bounds, and :func:`f_sq` evaluates it.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

import numpy as np

from .channel import (
    Ensemble,
    Povm,
    average_state,
    joint_distribution,
    separable_distribution,
)
from .divergence import (
    _check_alpha,
    _overlap_to_divergence,
    alpha_z_overlap,
    classical_overlap,
    in_dpi_region,
    kl_divergence,
    renyi_classical,
    shannon_entropy,
    umegaki_relative_entropy,
    von_neumann_entropy,
)
from .exceptions import ParameterError
from .matcore import spectral_decompose
from .sampler import random_povm


class Direction(enum.Enum):
    LHS_LE_RHS = "lhs_le_rhs"
    LHS_GE_RHS = "lhs_ge_rhs"


@dataclass(frozen=True)
class InequalityReport:
    lhs: float
    rhs: float
    direction: Direction
    parameters: dict = field(default_factory=dict)

    @property
    def slack(self) -> float:
        """Signed margin in the asserted direction; negative means violated."""
        if self.lhs == self.rhs:
            return 0.0
        if self.direction is Direction.LHS_LE_RHS:
            return self.rhs - self.lhs
        return self.lhs - self.rhs

    def holds(self, tol: float = 1e-9) -> bool:
        return self.slack >= -tol


def holevo_information(e: Ensemble, form: str = "entropy", base=None) -> float:
    """``S(rho_bar) - sum p S(rho_x)``, or with ``form="relative"`` the
    equivalent ``sum p S(rho_x || rho_bar)``."""
    avg = average_state(e)
    live = [(p, s) for p, s in zip(e.prior, e.states) if p > 0]
    if form == "entropy":
        value = von_neumann_entropy(avg, base) - sum(p * von_neumann_entropy(s, base) for p, s in live)
    elif form == "relative":
        value = sum(p * umegaki_relative_entropy(s, avg, base) for p, s in live)
    else:
        raise ParameterError(f"unknown form {form!r}")
    return max(float(value), 0.0)


def mutual_information(joint, base=None) -> float:
    """``H(X) + H(Y) - H(X, Y)`` for a joint array ``P[x, y]``."""
    joint = np.asarray(joint, dtype=float)
    value = (
        shannon_entropy(joint.sum(axis=1), base)
        + shannon_entropy(joint.sum(axis=0), base)
        - shannon_entropy(joint, base)
    )
    return max(value, 0.0)


def generalized_holevo_check(e: Ensemble, m: Povm, base=None) -> InequalityReport:
    """Classical relative entropy between joint and product statistics against ``C(p)``."""
    lhs = kl_divergence(joint_distribution(e, m), separable_distribution(e, m), base)
    rhs = holevo_information(e, base=base)
    return InequalityReport(lhs, rhs, Direction.LHS_LE_RHS, {"measure": "umegaki"})


def averaged_overlap(e: Ensemble, alpha: float, z: float) -> float:
    """``sum_x p(x) f_{a,z}(rho_x || rho_bar)`` over letters with ``p(x) > 0``."""
    avg = average_state(e)
    return float(sum(p * alpha_z_overlap(s, avg, alpha, z) for p, s in zip(e.prior, e.states) if p > 0))


def holevo_renyi_check(e: Ensemble, m: Povm, alpha: float, z: float) -> InequalityReport:
    alpha = _check_alpha(alpha)
    if not in_dpi_region(alpha, z):
        raise ParameterError(f"(alpha, z) = ({alpha}, {z}) is outside the data-processing region")
    lhs = classical_overlap(joint_distribution(e, m), separable_distribution(e, m), alpha)
    rhs = averaged_overlap(e, alpha, z)
    direction = Direction.LHS_LE_RHS if alpha > 1 else Direction.LHS_GE_RHS
    return InequalityReport(lhs, rhs, direction, {"alpha": alpha, "z": float(z)})


def optimal_z(alpha: float) -> float:
    alpha = _check_alpha(alpha)
    return alpha if alpha >= 0.5 else 1 - alpha


def f_sq(e: Ensemble, alpha: float) -> float:
    """Averaged overlap at the optimal ``z``: sandwiched for ``alpha >= 1/2``,
    reverse-sandwiched below."""
    return averaged_overlap(e, alpha, optimal_z(alpha))


def quantum_renyi_bound(e: Ensemble, alpha: float, base=None) -> float:
    """``log(f_sq) / (alpha - 1)``, the upper bound on the classical Rényi divergence."""
    alpha = _check_alpha(alpha)
    return _overlap_to_divergence(f_sq(e, alpha), alpha, base)


def renyi_bound(e: Ensemble, m: Povm, alpha: float, base=None) -> InequalityReport:
    alpha = _check_alpha(alpha)
    lhs = renyi_classical(joint_distribution(e, m), separable_distribution(e, m), alpha, base)
    rhs = quantum_renyi_bound(e, alpha, base)
    return InequalityReport(lhs, rhs, Direction.LHS_LE_RHS, {"alpha": alpha, "z": optimal_z(alpha)})


@dataclass(frozen=True)
class AccessibleInformation:
    value: float
    povm: Povm
    lower_bound: bool = True


def accessible_information(e: Ensemble, n_random: int = 64, seed=0, base=None) -> AccessibleInformation:
    """Heuristic accessible information: the best of the eigenbasis measurement of
    ``rho_bar`` and ``n_random`` sampled POVMs. Always a lower bound."""
    candidates = [Povm.projective(spectral_decompose(average_state(e)).eigenvectors)]
    for k in range(n_random):
        n_out = 2 + k % (2 * e.dim - 1)
        candidates.append(random_povm(e.dim, n_out, seed, stream=k))
    best_val, best = -math.inf, candidates[0]
    for m in candidates:
        val = mutual_information(joint_distribution(e, m), base)
        if val > best_val:
            best_val, best = val, m
    return AccessibleInformation(best_val, best)

