"""Entropies and divergences of multimode Gaussian bosonic states.

Closed-form von Neumann entropy, relative entropy and Petz-Renyi relative
entropy computed from means and covariance matrices via symplectic normal
forms, together with an independent truncated Fock-space oracle for
cross-validation.
"""

from .entropy import (
    DivergenceResult,
    PetzRenyiResult,
    binary_entropy,
    binary_relative_entropy,
    petz_renyi,
    relative_entropy,
    thermal_cross_term,
    thermal_mode_entropy,
    trace_power_overlap,
    von_neumann_entropy,
)
from .states import (
    GaussianState,
    ModeMarginal,
    StandardForm,
    characteristic_function,
    coherent_state,
    conjugate_symplectic,
    displace,
    is_vacuum_marginal,
    mode_marginal,
    nu_from_s,
    s_from_nu,
    standard_form,
    thermal_product,
    thermal_state,
    vacuum_state,
)
from .symplectic import (
    NumericalError,
    WilliamsonForm,
    beamsplitter_symplectic,
    complex_action,
    eig_symmetric,
    is_symplectic,
    is_valid_covariance,
    rotation_symplectic,
    sqrt_spd,
    squeeze_symplectic,
    symplectic_form,
    symplectic_inverse,
    uncertainty_eigenvalue,
    williamson,
)

__version__ = "0.1.0"

__all__ = [
    "DivergenceResult",
    "GaussianState",
    "ModeMarginal",
    "NumericalError",
    "PetzRenyiResult",
    "StandardForm",
    "WilliamsonForm",
    "beamsplitter_symplectic",
    "binary_entropy",
    "binary_relative_entropy",
    "characteristic_function",
    "coherent_state",
    "complex_action",
    "conjugate_symplectic",
    "displace",
    "eig_symmetric",
    "is_symplectic",
    "is_vacuum_marginal",
    "is_valid_covariance",
    "mode_marginal",
    "nu_from_s",
    "petz_renyi",
    "relative_entropy",
    "rotation_symplectic",
    "s_from_nu",
    "sqrt_spd",
    "squeeze_symplectic",
    "standard_form",
    "symplectic_form",
    "symplectic_inverse",
    "thermal_cross_term",
    "thermal_mode_entropy",
    "thermal_product",
    "thermal_state",
    "trace_power_overlap",
    "uncertainty_eigenvalue",
    "vacuum_state",
    "von_neumann_entropy",
    "williamson",
]
