"""Quantum Rényi divergences, the Holevo-Rényi inequality and derived exponent bounds."""

from .channel import (
    Ensemble,
    Povm,
    average_state,
    induced_channel,
    joint_distribution,
    separable_distribution,
)
from .coding import (
    binary_pure_channel,
    burnashev_holevo_e0,
    capacity_alpha,
    charbit_cutoff,
    gallager_e0_sq,
    quantum_bound_E,
    reliability_sq,
    sibson_mi,
)
from .divergence import (
    AlphaZ,
    alpha_z_divergence,
    alpha_z_overlap,
    alternate_distance,
    fidelity,
    in_dpi_region,
    kl_divergence,
    renyi_classical,
    renyi_relative_entropy,
    sandwiched_divergence,
    umegaki_relative_entropy,
    von_neumann_entropy,
)
from .exceptions import DomainError, OutsideValidityWarning, ParameterError, ValidationError
from .holevo import (
    InequalityReport,
    f_sq,
    generalized_holevo_check,
    holevo_information,
    holevo_renyi_check,
    mutual_information,
    optimal_z,
    renyi_bound,
)
from .matcore import matrix_power, spectral_decompose, support_projector, supports_compatible
from .units import get_log_base, log_base, set_log_base

__version__ = "0.1.0"
