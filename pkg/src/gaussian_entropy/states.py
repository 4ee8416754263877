"""Gaussian states of n bosonic modes.

A state is described by a complex mean vector m (length n) and a real
2n x 2n covariance matrix C in the block ordering (x_1..x_n, y_1..y_n),
with quadratures normalised so the vacuum covariance is I/2.  The
characteristic function of the state is

    chi(u) = exp( 2i (x . Im m - y . Re m) - (x, y)^T C (x, y) ),   u = x + iy,

which fixes every sign convention used downstream.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .symplectic import (
    DEFAULT_TOL,
    complex_action,
    is_symplectic,
    symplectic_form,
    symplectic_inverse,
    williamson,
)

#: Symplectic eigenvalues within this margin of 1/2 are treated as exactly
#: pure, i.e. mapped to s = infinity.
PURE_THRESHOLD = 1e-10

#: Default tolerance for deciding that a single-mode marginal is the vacuum.
VACUUM_TOL = 1e-8


def nu_from_s(s) -> np.ndarray:
    """Symplectic eigenvalue (1/2) coth(s/2) of a thermal mode, elementwise.

    ``s = inf`` maps exactly to 1/2 (a pure mode).
    """
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("thermal parameter s must be positive")
    return 0.5 / np.tanh(s / 2)


def s_from_nu(nu, pure_tol: float = PURE_THRESHOLD) -> np.ndarray:
    """Inverse of :func:`nu_from_s`: s = ln((nu + 1/2)/(nu - 1/2)), elementwise.

    Eigenvalues with nu <= 1/2 + ``pure_tol`` are mapped to ``math.inf``;
    infinity is the distinguished pure-mode value throughout the package,
    never a large finite float.
    """
    nu = np.asarray(nu, dtype=float)
    if np.any(nu < 0.5 - pure_tol):
        raise ValueError(f"symplectic eigenvalue below 1/2: {nu.min()}")
    out = np.empty_like(nu)
    for i, v in enumerate(np.atleast_1d(nu)):
        if v <= 0.5 + pure_tol:
            out.flat[i] = np.inf
        else:
            out.flat[i] = np.log((v + 0.5) / (v - 0.5))
    return out


@dataclass(frozen=True)
class GaussianState:
    """An n-mode Gaussian state.

    Attributes:
        mean: complex vector of length n.
        cov: real symmetric 2n x 2n covariance satisfying the uncertainty
            relation C + (i/2) J >= 0 (within tolerance).
    """

    mean: np.ndarray
    cov: np.ndarray

    def __post_init__(self):
        mean = np.atleast_1d(np.asarray(self.mean, dtype=complex))
        cov = np.asarray(self.cov, dtype=float)
        if mean.ndim != 1:
            raise ValueError(f"mean must be a vector, got shape {mean.shape}")
        if not np.all(np.isfinite(mean.view(float))):
            raise ValueError("mean contains non-finite entries")
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] % 2:
            raise ValueError(f"covariance must be 2n x 2n, got shape {cov.shape}")
        n = cov.shape[0] // 2
        if mean.shape[0] != n:
            raise ValueError(
                f"mean has {mean.shape[0]} modes but covariance has {n}"
            )
        if not np.all(np.isfinite(cov)):
            raise ValueError("covariance contains non-finite entries")
        if np.abs(cov - cov.T).max() > DEFAULT_TOL:
            raise ValueError("covariance matrix is not symmetric")
        J = symplectic_form(n)
        min_eig = float(np.linalg.eigvalsh(cov + 0.5j * J)[0])
        if min_eig < -DEFAULT_TOL:
            raise ValueError(
                f"covariance violates the uncertainty relation "
                f"(min eigenvalue of C + (i/2)J is {min_eig:.3e})"
            )
        mean = mean.copy()
        cov = (cov + cov.T) / 2
        mean.setflags(write=False)
        cov.setflags(write=False)
        object.__setattr__(self, "mean", mean)
        object.__setattr__(self, "cov", cov)

    @property
    def n(self) -> int:
        """Number of modes."""
        return self.cov.shape[0] // 2


@dataclass(frozen=True)
class ModeMarginal:
    """Single-mode marginal data: complex mean and 2x2 covariance block."""

    mean: complex
    cov: np.ndarray


@dataclass(frozen=True)
class StandardForm:
    """A state written as displaced, symplectically rotated product thermal.

    The covariance factorises as C = L^T diag(nu(s), nu(s)) L with the
    thermal parameters ``s`` ascending (infinity marks pure modes), and the
    mean equals ``displacement``.

    Attributes:
        displacement: complex mean vector of length n.
        L: symplectic 2n x 2n matrix.
        s: thermal parameters per mode, ascending, ``math.inf`` for pure modes.
    """

    displacement: np.ndarray
    L: np.ndarray
    s: np.ndarray


def vacuum_state(n: int = 1) -> GaussianState:
    """The n-mode vacuum: zero mean, covariance I/2."""
    return GaussianState(mean=np.zeros(n, dtype=complex), cov=np.eye(2 * n) / 2)


def thermal_state(s: float) -> GaussianState:
    """Single-mode thermal state with parameter s > 0.

    The covariance is nu I with nu = (1/2) coth(s/2); ``s = inf`` gives the
    vacuum.
    """
    nu = float(nu_from_s(s))
    return GaussianState(mean=np.zeros(1, dtype=complex), cov=np.eye(2) * nu)


def thermal_product(s_values) -> GaussianState:
    """Product of single-mode thermal states with the given parameters."""
    nus = nu_from_s(np.asarray(s_values, dtype=float))
    cov = np.diag(np.concatenate([nus, nus]))
    return GaussianState(mean=np.zeros(len(nus), dtype=complex), cov=cov)


def coherent_state(beta: complex) -> GaussianState:
    """Single-mode coherent state: mean beta, vacuum covariance."""
    return GaussianState(mean=np.array([beta], dtype=complex), cov=np.eye(2) / 2)


def characteristic_function(state: GaussianState, u) -> complex:
    """Evaluate the characteristic function at a complex argument u.

    Args:
        state: the Gaussian state.
        u: complex vector of length n.

    Returns:
        exp(2i (x . Im m - y . Re m) - (x,y)^T C (x,y)) with u = x + iy.
    """
    u = np.atleast_1d(np.asarray(u, dtype=complex))
    if u.shape != (state.n,):
        raise ValueError(f"expected a length-{state.n} argument, got shape {u.shape}")
    x, y = u.real, u.imag
    xi = np.concatenate([x, y])
    phase = 2j * (x @ state.mean.imag - y @ state.mean.real)
    return complex(np.exp(phase - xi @ state.cov @ xi))


def displace(state: GaussianState, z) -> GaussianState:
    """Displace the state: mean -> mean + z, covariance unchanged."""
    z = np.atleast_1d(np.asarray(z, dtype=complex))
    if z.shape != (state.n,):
        raise ValueError(f"expected a length-{state.n} displacement, got shape {z.shape}")
    return GaussianState(mean=state.mean + z, cov=state.cov)


def conjugate_symplectic(
    state: GaussianState, M, tol: float = DEFAULT_TOL
) -> GaussianState:
    """Conjugate the state by the Gaussian unitary of a symplectic matrix.

    Returns the state with mean M^{-1} o m and covariance M^T C M, i.e. the
    result of conjugating by the inverse unitary: the characteristic function
    of the output at u equals that of the input at M o u.

    Args:
        state: input state.
        M: real symplectic 2n x 2n matrix.
        tol: symplecticity tolerance.

    Raises:
        ValueError: if M is not symplectic within ``tol``.
    """
    M = np.asarray(M, dtype=float)
    if not is_symplectic(M, tol):
        raise ValueError("matrix is not symplectic within tolerance")
    if M.shape[0] != 2 * state.n:
        raise ValueError(
            f"symplectic matrix has {M.shape[0] // 2} modes but state has {state.n}"
        )
    Minv = symplectic_inverse(M)
    return GaussianState(
        mean=complex_action(Minv, state.mean), cov=M.T @ state.cov @ M
    )


def mode_marginal(state: GaussianState, k: int) -> ModeMarginal:
    """Extract the single-mode marginal of mode k (0-based).

    The 2x2 covariance block collects the (x_k, y_k) rows and columns; for a
    product state it reproduces the factor state's covariance.

    Raises:
        ValueError: if k is out of range.
    """
    n = state.n
    if not 0 <= k < n:
        raise ValueError(f"mode index {k} out of range for {n} modes")
    idx = [k, k + n]
    return ModeMarginal(mean=complex(state.mean[k]), cov=state.cov[np.ix_(idx, idx)])


def is_vacuum_marginal(marginal: ModeMarginal, tol: float = VACUUM_TOL) -> bool:
    """Whether a single-mode marginal is the vacuum within ``tol``.

    Both the mean and the deviation of the covariance block from I/2 must be
    below ``tol`` in max-norm.
    """
    return bool(
        abs(marginal.mean) <= tol
        and np.abs(marginal.cov - np.eye(2) / 2).max() <= tol
    )


def standard_form(state: GaussianState) -> StandardForm:
    """Decompose a state as displaced, symplectically rotated product thermal.

    The Williamson form of the covariance supplies L and the symplectic
    eigenvalues; eigenvalues within :data:`PURE_THRESHOLD` of 1/2 become
    ``s = inf``.  Since the eigenvalues come out descending, the thermal
    parameters are ascending, and mode k of the underlying thermal product
    carries s[k].

    Returns:
        A :class:`StandardForm` with ``displacement`` equal to the state mean.
    """
    form = williamson(state.cov)
    s = s_from_nu(form.nu)
    s.setflags(write=False)
    return StandardForm(displacement=state.mean, L=form.L, s=s)
