"""Truncated Fock-space brute force for cross-checking the closed forms.

States are built from recipes: a product of single-mode thermal diagonals
followed by a sequence of generator unitaries (displacement, squeeze,
rotation, beamsplitter) evaluated with ``scipy.linalg.expm`` at a finite
photon-number cutoff.  Everything here is plain matrix arithmetic; none of
the closed-form decompositions are reused, so agreement between the two
layers is evidence, not tautology.

Because a recipe applies unitaries to a known diagonal, the truncated
density's exact eigenstructure is available: the eigenvalues are the
truncated thermal products and the eigenvectors are the columns of the
accumulated unitary.  The divergence helpers accept either a raw density
matrix (plain eigendecomposition, reliable only while the spectrum stays
above ``eig_floor``) or an :class:`OracleState` (exact spectrum; required
when thermal tails extend below machine precision, which happens for every
thermal reference with t * dim beyond roughly 36).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np
from scipy.linalg import expm

from .states import GaussianState, nu_from_s
from .symplectic import (
    beamsplitter_symplectic,
    complex_action,
    rotation_symplectic,
    squeeze_symplectic,
    symplectic_inverse,
)

#: Default photon-number cutoff.
DEFAULT_DIM = 60

#: Eigenvalues at or below this are treated as exact zeros in the
#: matrix-input routes.
EIG_FLOOR = 1e-12

#: Maximum probability mass the first state may place on the second state's
#: null space before the relative entropy is declared infinite.
MASS_TOL = 1e-8

#: Maximum allowed deviation of a truncated density's trace from 1.
TRACE_TOL = 1e-8


def annihilation_matrix(d: int) -> np.ndarray:
    """Truncated annihilation operator: sqrt(k) on the superdiagonal.

    The truncated commutator [a, a^dag] equals the identity only on the
    leading (d-1)-dimensional block; the parameter box and the tail checks
    below keep state weight away from the defective last row.
    """
    if d < 2:
        raise ValueError(f"Fock cutoff must be at least 2, got {d}")
    return np.diag(np.sqrt(np.arange(1, d)), 1).astype(complex)


def thermal_log_spectrum(s: float, d: int) -> np.ndarray:
    """Exact log-eigenvalues of the truncated single-mode thermal diagonal.

    Entry k is ln(1 - e^{-s}) - s k; for s = inf the state is the vacuum and
    the zeros are marked with -inf.
    """
    if s <= 0:
        raise ValueError("thermal parameter s must be positive")
    if d < 2:
        raise ValueError(f"Fock cutoff must be at least 2, got {d}")
    if math.isinf(s):
        out = np.full(d, -np.inf)
        out[0] = 0.0
        return out
    return math.log1p(-math.exp(-s)) - s * np.arange(d, dtype=float)


def thermal_density(s: float, d: int) -> np.ndarray:
    """Truncated thermal density diag((1 - e^{-s}) e^{-s k}).

    No renormalisation is applied; the missing tail mass is exactly
    e^{-s d} and can be checked with :func:`thermal_tail_mass`.
    """
    lg = thermal_log_spectrum(s, d)
    return np.diag(np.exp(lg)).astype(complex)


def thermal_tail_mass(s: float, d: int) -> float:
    """Probability mass of a thermal state beyond the cutoff: e^{-s d}."""
    if s <= 0:
        raise ValueError("thermal parameter s must be positive")
    return 0.0 if math.isinf(s) else float(math.exp(-s * d))


def displacement_unitary(beta: complex, d: int) -> np.ndarray:
    """exp(beta a^dag - conj(beta) a) on the truncated space."""
    a = annihilation_matrix(d)
    return expm(beta * a.conj().T - np.conj(beta) * a)


def squeeze_unitary(r: float, phi: float, d: int) -> np.ndarray:
    """exp((r/2)(e^{-2i phi} a^2 - e^{2i phi} a^dag^2)) on the truncated space."""
    a = annihilation_matrix(d)
    ad = a.conj().T
    return expm((r / 2) * (np.exp(-2j * phi) * (a @ a) - np.exp(2j * phi) * (ad @ ad)))


def rotation_unitary(theta: float, d: int) -> np.ndarray:
    """exp(-i theta a^dag a) on the truncated space."""
    a = annihilation_matrix(d)
    return expm(-1j * theta * (a.conj().T @ a))


def beamsplitter_unitary(theta: float, d: int) -> np.ndarray:
    """exp(theta (a^dag b - a b^dag)) on the d^2-dimensional two-mode space."""
    a = annihilation_matrix(d)
    eye = np.eye(d)
    A = np.kron(a, eye)
    B = np.kron(eye, a)
    return expm(theta * (A.conj().T @ B - A @ B.conj().T))


@dataclass(frozen=True)
class Displacement:
    """Generator step exp(beta a^dag - conj(beta) a) on one mode."""

    mode: int
    beta: complex


@dataclass(frozen=True)
class Squeeze:
    """Generator step exp((r/2)(e^{-2i phi} a^2 - e^{2i phi} a^dag^2))."""

    mode: int
    r: float
    phi: float = 0.0


@dataclass(frozen=True)
class Rotation:
    """Generator step exp(-i theta a^dag a) on one mode."""

    mode: int
    theta: float


@dataclass(frozen=True)
class Beamsplitter:
    """Generator step exp(theta (a^dag b - a b^dag)) on modes (0, 1)."""

    theta: float


Generator = Displacement | Squeeze | Rotation | Beamsplitter


def _embed(U: np.ndarray, mode: int, d: int, n_modes: int) -> np.ndarray:
    if n_modes == 1:
        return U
    return np.kron(U, np.eye(d)) if mode == 0 else np.kron(np.eye(d), U)


def generator_unitary(step: Generator, d: int, n_modes: int) -> np.ndarray:
    """Dense unitary of one generator step on the full truncated space."""
    if n_modes not in (1, 2):
        raise ValueError(f"oracle supports 1 or 2 modes, got {n_modes}")
    if isinstance(step, Beamsplitter):
        if n_modes != 2:
            raise ValueError("beamsplitter step requires a two-mode state")
        return beamsplitter_unitary(step.theta, d)
    if not 0 <= step.mode < n_modes:
        raise ValueError(f"mode index {step.mode} out of range for {n_modes} modes")
    if isinstance(step, Displacement):
        U = displacement_unitary(step.beta, d)
    elif isinstance(step, Squeeze):
        U = squeeze_unitary(step.r, step.phi, d)
    elif isinstance(step, Rotation):
        U = rotation_unitary(step.theta, d)
    else:
        raise TypeError(f"unknown generator step: {step!r}")
    return _embed(U, step.mode, d, n_modes)


def apply_generator(rho_mat: np.ndarray, step: Generator, d: int, n_modes: int) -> np.ndarray:
    """Conjugate a truncated density by one generator step: U rho U^dag."""
    U = generator_unitary(step, d, n_modes)
    if rho_mat.shape != U.shape:
        raise ValueError(
            f"density has shape {rho_mat.shape}, expected {U.shape} for d={d}, "
            f"{n_modes} mode(s)"
        )
    return U @ rho_mat @ U.conj().T


@dataclass(frozen=True)
class OracleState:
    """A truncated Fock state defined by a reproducible recipe.

    Attributes:
        thermal: per-mode thermal parameters of the initial product state
            (``math.inf`` for vacuum modes).
        steps: generator steps applied in order.
        dim: photon-number cutoff per mode.

    The recipe supports two synchronised views: :meth:`fock_density` builds
    the truncated matrix, while :meth:`gaussian_state` tracks the exact mean
    and covariance through the corresponding symplectic actions.  Both views
    describe the same state (up to truncation), which the characteristic
    function tests verify directly.
    """

    thermal: tuple[float, ...]
    steps: tuple[Generator, ...] = ()
    dim: int = DEFAULT_DIM

    def __post_init__(self):
        thermal = tuple(float(s) for s in self.thermal)
        if not 1 <= len(thermal) <= 2:
            raise ValueError(f"oracle supports 1 or 2 modes, got {len(thermal)}")
        if any(s <= 0 for s in thermal):
            raise ValueError("thermal parameters must be positive")
        if self.dim < 2:
            raise ValueError(f"Fock cutoff must be at least 2, got {self.dim}")
        object.__setattr__(self, "thermal", thermal)
        object.__setattr__(self, "steps", tuple(self.steps))
        for step in self.steps:
            if isinstance(step, Beamsplitter):
                if len(thermal) != 2:
                    raise ValueError("beamsplitter step requires a two-mode state")
            elif not 0 <= step.mode < len(thermal):
                raise ValueError(
                    f"mode index {step.mode} out of range for {len(thermal)} modes"
                )

    @property
    def n(self) -> int:
        """Number of modes."""
        return len(self.thermal)

    def log_spectrum(self) -> np.ndarray:
        """Exact log-eigenvalues of the truncated density (kron order).

        Unitary conjugation inside the truncated space preserves the
        spectrum, so these are the thermal products regardless of the steps;
        -inf marks exact zeros.
        """
        parts = [thermal_log_spectrum(s, self.dim) for s in self.thermal]
        if len(parts) == 1:
            return parts[0]
        return np.add.outer(parts[0], parts[1]).ravel()

    def recipe_unitary(self) -> np.ndarray:
        """Product of the step unitaries; its columns are the eigenvectors."""
        return _recipe_unitary(self)

    def fock_density(self) -> np.ndarray:
        """The truncated density matrix U diag(spectrum) U^dag."""
        p = np.exp(self.log_spectrum())
        U = self.recipe_unitary()
        return (U * p) @ U.conj().T

    def tail_mass(self) -> float:
        """Exact trace deficit 1 - prod_k (1 - e^{-s_k dim})."""
        kept = 1.0
        for s in self.thermal:
            kept *= 1 - thermal_tail_mass(s, self.dim)
        return 1 - kept

    def gaussian_state(self) -> GaussianState:
        """The untruncated mean and covariance implied by the recipe.

        Thermal initial covariance diag(nu(s), nu(s)); each symplectic step M
        sends (m, C) to (M o m, (M^-1)^T C M^-1).  A displacement step D(beta)
        shifts the mean by -beta: the characteristic-function convention used
        by the closed-form layer carries the negative of the Fock-space <a>,
        a parity flip under which covariances, entropies and divergences are
        all invariant.
        """
        n = self.n
        nus = nu_from_s(np.asarray(self.thermal))
        C = np.diag(np.concatenate([nus, nus]))
        m = np.zeros(n, dtype=complex)
        for step in self.steps:
            if isinstance(step, Displacement):
                m = m.copy()
                m[step.mode] -= step.beta
                continue
            M = generator_symplectic(step, n)
            Minv = symplectic_inverse(M)
            m = complex_action(M, m)
            C = Minv.T @ C @ Minv
        return GaussianState(mean=m, cov=C)


def generator_symplectic(step: Generator, n_modes: int) -> np.ndarray:
    """Symplectic matrix of a quadratic generator step (not displacement)."""
    if isinstance(step, Squeeze):
        return squeeze_symplectic(n_modes, step.mode, step.r, step.phi)
    if isinstance(step, Rotation):
        return rotation_symplectic(n_modes, step.mode, step.theta)
    if isinstance(step, Beamsplitter):
        return beamsplitter_symplectic(n_modes, 0, 1, step.theta)
    raise TypeError(f"no symplectic action for step {step!r}")


@lru_cache(maxsize=64)
def _recipe_unitary(state: OracleState) -> np.ndarray:
    n, d = state.n, state.dim
    U = np.eye(d**n, dtype=complex)
    for step in state.steps:
        U = generator_unitary(step, d, n) @ U
    U.setflags(write=False)
    return U


def oracle_char_fn(rho_mat: np.ndarray, u) -> complex:
    """Tr[W(u) rho] with W(u) the tensor product of displacement unitaries.

    The number of modes is read from ``len(u)``; the per-mode cutoff is
    inferred from the density's dimension.
    """
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    n = len(u)
    if n not in (1, 2):
        raise ValueError(f"oracle supports 1 or 2 modes, got {n}")
    dim = rho_mat.shape[0]
    d = dim if n == 1 else math.isqrt(dim)
    if d**n != dim or rho_mat.shape != (dim, dim):
        raise ValueError(
            f"density shape {rho_mat.shape} is not a {n}-mode truncated space"
        )
    W = displacement_unitary(u[0], d)
    if n == 2:
        W = np.kron(W, displacement_unitary(u[1], d))
    return complex(np.trace(W @ rho_mat))


def _spectral_data(
    state, eig_floor: float
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(density, eigenvector columns, log-eigenvalues) for either input kind."""
    if isinstance(state, OracleState):
        return state.fock_density(), state.recipe_unitary(), state.log_spectrum()
    rho = np.asarray(state, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"expected a square density matrix, got shape {rho.shape}")
    w, V = np.linalg.eigh(rho)
    lg = np.full(len(w), -np.inf)
    mask = w > eig_floor
    lg[mask] = np.log(w[mask])
    return rho, V, lg


def _check_trace(rho_mat: np.ndarray, trace_tol: float, name: str) -> None:
    deficit = abs(float(np.real(np.trace(rho_mat))) - 1)
    if deficit > trace_tol:
        raise ValueError(
            f"{name} trace deviates from 1 by {deficit:.3e}; the truncation "
            "tail is too heavy for this cutoff"
        )


def oracle_von_neumann_entropy(state, eig_floor: float = EIG_FLOOR) -> float:
    """-Tr rho ln rho over eigenvalues above ``eig_floor`` (or exact spectrum)."""
    if isinstance(state, OracleState):
        lg = state.log_spectrum()
        p = np.exp(lg)
        mask = p > 0
        return float(-np.sum(p[mask] * lg[mask]))
    rho = np.asarray(state, dtype=complex)
    w = np.linalg.eigvalsh(rho)
    w = w[w > eig_floor]
    return float(-np.sum(w * np.log(w)))


def oracle_relative_entropy(
    rho,
    sigma,
    eig_floor: float = EIG_FLOOR,
    mass_tol: float = MASS_TOL,
    trace_tol: float = TRACE_TOL,
) -> float:
    """Tr rho ln rho - Tr rho ln sigma by explicit spectral sums.

    Args:
        rho: density matrix or :class:`OracleState`.
        sigma: density matrix or :class:`OracleState`.  Matrix input treats
            eigenvalues at or below ``eig_floor`` as exact zeros, which is
            only faithful while sigma's true spectrum stays above the floor;
            recipes with heavier thermal tails must be passed as
            :class:`OracleState` so the exact spectrum is used.
        eig_floor: zero threshold for matrix inputs.
        mass_tol: mass of rho tolerated on sigma's null space before the
            result is ``math.inf``.
        trace_tol: maximum trace deficit accepted for either state.

    Returns:
        The relative entropy in nats, or ``math.inf`` on support failure.
    """
    rho_mat, _, lg_rho = _spectral_data(rho, eig_floor)
    _, U_sigma, lg_sigma = _spectral_data(sigma, eig_floor)
    if rho_mat.shape[0] != U_sigma.shape[0]:
        raise ValueError("states live on different truncated spaces")
    _check_trace(rho_mat, trace_tol, "rho")
    sigma_mat = sigma.fock_density() if isinstance(sigma, OracleState) else np.asarray(sigma)
    _check_trace(sigma_mat, trace_tol, "sigma")

    p = np.exp(lg_rho)
    mask = p > 0
    tr_rho_ln_rho = float(np.sum(p[mask] * lg_rho[mask]))

    weights = np.einsum("ij,jk,ki->i", U_sigma.conj().T, rho_mat, U_sigma)
    weights = np.clip(np.real(weights), 0.0, None)
    null = ~np.isfinite(lg_sigma)
    if float(weights[null].sum()) > mass_tol:
        return math.inf
    tr_rho_ln_sigma = float(np.sum(weights[~null] * lg_sigma[~null]))
    return tr_rho_ln_rho - tr_rho_ln_sigma


def oracle_petz_renyi(
    rho,
    sigma,
    alpha: float,
    eig_floor: float = EIG_FLOOR,
    trace_tol: float = TRACE_TOL,
) -> float:
    """ln(Tr rho^alpha sigma^(1-alpha)) / (alpha - 1) by spectral sums.

    The trace is evaluated as sum_ij p_i^alpha |<r_i|s_j>|^2 q_j^(1-alpha)
    over both eigensystems, which keeps fractional powers away from
    eigendecomposition noise when exact spectra are available.
    """
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha}")
    rho_mat, U_rho, lg_rho = _spectral_data(rho, eig_floor)
    sigma_mat, U_sigma, lg_sigma = _spectral_data(sigma, eig_floor)
    if rho_mat.shape[0] != sigma_mat.shape[0]:
        raise ValueError("states live on different truncated spaces")
    _check_trace(rho_mat, trace_tol, "rho")
    _check_trace(sigma_mat, trace_tol, "sigma")
    pa = np.exp(alpha * lg_rho)
    qa = np.exp((1 - alpha) * lg_sigma)
    overlap_sq = np.abs(U_rho.conj().T @ U_sigma) ** 2
    T = float(pa @ overlap_sq @ qa)
    if T <= 0:
        return math.inf
    return math.log(T) / (alpha - 1)


def truncation_gated(
    rho: OracleState, sigma: OracleState, alpha: float | None = None
) -> tuple[float, float]:
    """Oracle divergence at the recipe cutoff and at twice the cutoff.

    Args:
        rho: first recipe state.
        sigma: second recipe state (same cutoff).
        alpha: Petz-Renyi order, or None for the relative entropy.

    Returns:
        ``(value, gap)`` where ``value`` is computed at 2 * dim and ``gap``
        is the absolute difference between the two cutoffs (0 when both are
        infinite).  Callers accept the comparison only when ``gap`` is below
        their tolerance.
    """
    if rho.dim != sigma.dim:
        raise ValueError("recipes must share a cutoff")
    rho2 = replace(rho, dim=2 * rho.dim)
    sigma2 = replace(sigma, dim=2 * sigma.dim)
    if alpha is None:
        v1 = oracle_relative_entropy(rho, sigma)
        v2 = oracle_relative_entropy(rho2, sigma2)
    else:
        v1 = oracle_petz_renyi(rho, sigma, alpha)
        v2 = oracle_petz_renyi(rho2, sigma2, alpha)
    if math.isinf(v1) and math.isinf(v2):
        return v2, 0.0
    return v2, abs(v2 - v1)
