"""Closed-form entropies and divergences of Gaussian states.

Everything here reduces to the thermal parameters produced by the Williamson
decomposition.  A single-mode thermal state with parameter s > 0 has the
geometric spectrum (1 - e^{-s}) e^{-s k}, so its von Neumann entropy is the
binary entropy H(e^{-s}) / (1 - e^{-s}); divergences between two states
reduce to sums of such classical terms plus quadratic corrections once the
second state is rotated into its product-thermal frame.

All values are in nats.  ``math.inf`` marks pure modes (s = infinity) and
infinite divergences.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from .states import (
    GaussianState,
    ModeMarginal,
    VACUUM_TOL,
    conjugate_symplectic,
    displace,
    is_vacuum_marginal,
    mode_marginal,
    nu_from_s,
    s_from_nu,
)
from .symplectic import NumericalError, symplectic_inverse, williamson


@dataclass(frozen=True)
class DivergenceResult:
    """Relative entropy split into classical and quantum contributions.

    Attributes:
        value: the divergence in nats, ``math.inf`` when the support
            condition fails.
        classical_part: sum of the per-mode classical (spectral) terms.
        quantum_part: sum of the per-mode quadratic terms.
        per_mode_terms: tuple of (classical, quantum) pairs, one per mode of
            the second argument's product-thermal frame.  When the value is
            finite, value = classical_part + quantum_part = sum of all pairs.
    """

    value: float
    classical_part: float
    quantum_part: float
    per_mode_terms: tuple[tuple[float, float], ...]


@dataclass(frozen=True)
class PetzRenyiResult:
    """Petz-Renyi relative entropy of order alpha in (0, 1).

    Attributes:
        value: the divergence in nats (always finite for valid Gaussian
            inputs, which never have disjoint support).
        alpha: the order.
        terms: the four-term decomposition (spectral term of the first state,
            spectral term of the second, mean term, determinant term) whose
            sum is ``value``.
    """

    value: float
    alpha: float
    terms: tuple[float, float, float, float]


def binary_entropy(p: float) -> float:
    """H(p) = -p ln p - (1-p) ln(1-p) with 0 ln 0 = 0."""
    if not 0 <= p <= 1:
        raise ValueError(f"probability out of range: {p}")
    if p in (0.0, 1.0):
        return 0.0
    return float(-p * math.log(p) - (1 - p) * math.log1p(-p))


def binary_relative_entropy(p1: float, p2: float) -> float:
    """H(p1 : p2) = p1 ln(p1/p2) + (1-p1) ln((1-p1)/(1-p2)).

    Returns ``math.inf`` when p2 is 0 or 1 while p1 differs from it.
    """
    for p in (p1, p2):
        if not 0 <= p <= 1:
            raise ValueError(f"probability out of range: {p}")
    if p1 == p2:
        return 0.0
    if p2 in (0.0, 1.0):
        return math.inf
    val = 0.0
    if p1 > 0:
        val += p1 * math.log(p1 / p2)
    if p1 < 1:
        val += (1 - p1) * math.log((1 - p1) / (1 - p2))
    return float(val)


def thermal_mode_entropy(s: float) -> float:
    """Entropy H(e^{-s})/(1 - e^{-s}) of a single thermal mode; 0 for s = inf."""
    if s <= 0:
        raise ValueError("thermal parameter s must be positive")
    if math.isinf(s):
        return 0.0
    p = math.exp(-s)
    return binary_entropy(p) / (1 - p)


def von_neumann_entropy(state: GaussianState) -> float:
    """Von Neumann entropy in nats, summed over the symplectic spectrum.

    Pure modes (symplectic eigenvalue 1/2) contribute zero; the result is
    invariant under displacements and symplectic conjugations.
    """
    s = s_from_nu(williamson(state.cov).nu)
    return float(sum(thermal_mode_entropy(sk) for sk in s))


def thermal_cross_term(marginal: ModeMarginal, t: float) -> float:
    """Expectation of the log of a thermal state in a single-mode marginal.

    For a marginal with mean m and 2x2 covariance block T, and a thermal
    reference with finite parameter t, this is

        ln(1 - e^{-t}) - (t/2) (Tr T + 2 |m|^2 - 1).

    Args:
        marginal: single-mode marginal data.
        t: thermal parameter of the reference mode; must be finite.
    """
    if not 0 < t < math.inf:
        raise ValueError("thermal parameter t must be positive and finite")
    tr = float(np.trace(marginal.cov))
    return math.log1p(-math.exp(-t)) - (t / 2) * (tr + 2 * abs(marginal.mean) ** 2 - 1)


class _SigmaFrame(NamedTuple):
    """First state re-expressed in the second state's product-thermal frame."""

    rho: GaussianState  # transformed first state
    t: np.ndarray  # thermal parameters of sigma, ascending
    s: np.ndarray  # thermal parameters of rho, ascending
    L_rho: np.ndarray  # Williamson matrix of the transformed covariance


def _sigma_frame(rho: GaussianState, sigma: GaussianState) -> _SigmaFrame:
    if rho.n != sigma.n:
        raise ValueError(
            f"states have different mode counts: {rho.n} and {sigma.n}"
        )
    form_sigma = williamson(sigma.cov)
    t = s_from_nu(form_sigma.nu)
    # Conjugating by the inverse of sigma's Williamson matrix sends sigma to
    # the product thermal state (0, diag(nu(t), nu(t))) exactly; the same
    # transport applied to rho yields mean L o (m_rho - m_sigma) and
    # covariance (L^-1)^T C_rho L^-1.
    K = symplectic_inverse(form_sigma.L)
    rho_p = conjugate_symplectic(displace(rho, -sigma.mean), K)
    form_rho = williamson(rho_p.cov)
    s = s_from_nu(form_rho.nu)
    return _SigmaFrame(rho=rho_p, t=t, s=s, L_rho=form_rho.L)


def relative_entropy(
    rho: GaussianState, sigma: GaussianState, vacuum_tol: float = VACUUM_TOL
) -> DivergenceResult:
    """Quantum relative entropy S(rho || sigma) = Tr rho (ln rho - ln sigma).

    The second state is rotated into its product-thermal frame; each of its
    modes contributes a classical term H(e^{-s_k} : e^{-t_k})/(1 - e^{-s_k})
    and a quantum term (t_k/2)(Tr T_k - coth(s_k/2) + 2|m_k|^2), where T_k and
    m_k describe the transported first state's marginal and the s_k are its
    thermal parameters, both ascending.

    A pure mode of sigma (t_k = inf) forces the value to ``math.inf`` unless
    the transported marginal of rho on that mode is the vacuum within
    ``vacuum_tol``, in which case the mode contributes nothing.

    Args:
        rho: first state.
        sigma: second state, same number of modes.
        vacuum_tol: tolerance for the pure-mode support check.

    Returns:
        A :class:`DivergenceResult`; infinite modes are reported as
        (inf, inf) entries in ``per_mode_terms``.
    """
    frame = _sigma_frame(rho, sigma)
    n = rho.n
    per_mode: list[tuple[float, float]] = []
    for k in range(n):
        tk, sk = float(frame.t[k]), float(frame.s[k])
        marg = mode_marginal(frame.rho, k)
        if math.isinf(tk):
            if is_vacuum_marginal(marg, vacuum_tol):
                per_mode.append((0.0, 0.0))
            else:
                per_mode.append((math.inf, math.inf))
            continue
        p1 = 0.0 if math.isinf(sk) else math.exp(-sk)
        classical = binary_relative_entropy(p1, math.exp(-tk)) / (1 - p1)
        coth = 2 * float(nu_from_s(sk))
        quantum = (tk / 2) * (
            float(np.trace(marg.cov)) - coth + 2 * abs(marg.mean) ** 2
        )
        per_mode.append((classical, quantum))
    classical_part = float(sum(c for c, _ in per_mode))
    quantum_part = float(sum(q for _, q in per_mode))
    value = classical_part + quantum_part
    return DivergenceResult(
        value=value,
        classical_part=classical_part,
        quantum_part=quantum_part,
        per_mode_terms=tuple(per_mode),
    )


def _thermal_diagonal(s: np.ndarray) -> np.ndarray:
    """diag(nu(s), nu(s)) with the s = inf entries exactly 1/2."""
    nus = nu_from_s(s)
    return np.diag(np.concatenate([nus, nus]))


def _log1mexp(r: np.ndarray) -> np.ndarray:
    """ln(1 - e^{-r}) elementwise; exactly 0 for r = inf."""
    return np.log1p(-np.exp(-np.asarray(r, dtype=float)))


class _OverlapPieces(NamedTuple):
    log_prefactor: float  # ln of the spectral normalisation ratio
    quad: float  # m~^T G^{-1} m~
    logdet: float  # ln det G


def _overlap_pieces(frame: _SigmaFrame, alpha: float) -> _OverlapPieces:
    s, t = frame.s, frame.t
    G = (
        frame.L_rho.T @ _thermal_diagonal(alpha * s) @ frame.L_rho
        + _thermal_diagonal((1 - alpha) * t)
    )
    m = frame.rho.mean
    mtil = np.concatenate([-m.imag, m.real])
    try:
        factor = cho_factor(G, lower=True)
    except LinAlgError as exc:
        raise NumericalError(
            "mode-overlap matrix is not positive definite"
        ) from exc
    quad = float(mtil @ cho_solve(factor, mtil))
    logdet = float(2 * np.sum(np.log(np.diag(factor[0]))))
    log_pref = float(
        alpha * np.sum(_log1mexp(s))
        - np.sum(_log1mexp(alpha * s))
        + (1 - alpha) * np.sum(_log1mexp(t))
        - np.sum(_log1mexp((1 - alpha) * t))
    )
    return _OverlapPieces(log_prefactor=log_pref, quad=quad, logdet=logdet)


def _check_alpha(alpha: float) -> None:
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie strictly between 0 and 1, got {alpha}")


def petz_renyi(
    rho: GaussianState, sigma: GaussianState, alpha: float
) -> PetzRenyiResult:
    """Petz-Renyi relative entropy ln(Tr rho^alpha sigma^(1-alpha))/(alpha - 1).

    Computed as a four-term closed form in the second state's product-thermal
    frame: two spectral terms built from the thermal parameters of each state,
    a mean term m~^T G^{-1} m~ / (1 - alpha) and a determinant term
    ln det G / (2 (1 - alpha)), where G combines the alpha-scaled thermal
    diagonals of both states.  Pure modes enter through the limiting entries
    coth(inf) = 1 and ln(1 - e^{-inf}) = 0.

    Args:
        rho: first state.
        sigma: second state, same number of modes.
        alpha: order, strictly between 0 and 1.

    Returns:
        A :class:`PetzRenyiResult` whose ``terms`` sum to ``value``.
    """
    _check_alpha(alpha)
    frame = _sigma_frame(rho, sigma)
    pieces = _overlap_pieces(frame, alpha)
    s, t = frame.s, frame.t
    term_rho = float(
        -(alpha * np.sum(_log1mexp(s)) - np.sum(_log1mexp(alpha * s))) / (1 - alpha)
    )
    term_sigma = float(
        np.sum(-_log1mexp(t) + _log1mexp((1 - alpha) * t) / (1 - alpha))
    )
    term_mean = pieces.quad / (1 - alpha)
    term_det = pieces.logdet / (2 * (1 - alpha))
    value = term_rho + term_sigma + term_mean + term_det
    return PetzRenyiResult(
        value=float(value),
        alpha=alpha,
        terms=(term_rho, term_sigma, term_mean, term_det),
    )


def trace_power_overlap(
    rho: GaussianState, sigma: GaussianState, alpha: float
) -> float:
    """The trace functional Tr rho^alpha sigma^(1-alpha) for alpha in (0, 1).

    Evaluated as a Gaussian phase-space integral: a spectral prefactor times
    exp(-m~^T G^{-1} m~) / sqrt(det G).  Satisfies
    ``petz_renyi(rho, sigma, alpha).value = ln(result)/(alpha - 1)``.
    """
    _check_alpha(alpha)
    frame = _sigma_frame(rho, sigma)
    pieces = _overlap_pieces(frame, alpha)
    return float(
        math.exp(pieces.log_prefactor - pieces.quad - pieces.logdet / 2)
    )
