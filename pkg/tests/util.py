"""Shared randomized builders for the test suite."""

import numpy as np

from gaussian_entropy import (
    GaussianState,
    beamsplitter_symplectic,
    rotation_symplectic,
    squeeze_symplectic,
)
from gaussian_entropy import fock


def random_symplectic(rng, n, rounds=2, r_max=0.8):
    """Product of squeezers, rotations and beamsplitters over all modes."""
    M = np.eye(2 * n)
    for _ in range(rounds):
        for k in range(n):
            M = M @ squeeze_symplectic(n, k, rng.uniform(-r_max, r_max), rng.uniform(0, np.pi))
            M = M @ rotation_symplectic(n, k, rng.uniform(0, 2 * np.pi))
        for i in range(n):
            for j in range(i + 1, n):
                M = M @ beamsplitter_symplectic(n, i, j, rng.uniform(0, 2 * np.pi))
    return M


def random_covariance(rng, n, nu_min=0.5, nu_max=5.0):
    """Valid covariance with a planted symplectic spectrum; returns (C, nu)."""
    nus = np.sort(rng.uniform(nu_min, nu_max, n))[::-1]
    D = np.diag(np.concatenate([nus, nus]))
    M = random_symplectic(rng, n)
    return M.T @ D @ M, nus


def random_state(rng, n, nu_min=0.55, nu_max=3.0, mean_scale=1.0):
    """Random mixed Gaussian state with bounded squeezing and displacement."""
    cov, _ = random_covariance(rng, n, nu_min=nu_min, nu_max=nu_max)
    mean = mean_scale * (rng.uniform(-1, 1, n) + 1j * rng.uniform(-1, 1, n))
    return GaussianState(mean=mean, cov=cov)


def random_recipe(rng, kind, dim=fock.DEFAULT_DIM):
    """Single-mode oracle recipe within the standard parameter box.

    ``kind`` is one of "thermal", "displaced", "squeezed" (squeezed recipes
    also carry a displacement so the mean term is exercised).
    """
    s = rng.uniform(0.5, 3.0)
    steps = []
    if kind == "squeezed":
        steps.append(fock.Squeeze(0, rng.uniform(0.1, 0.8), rng.uniform(0, np.pi)))
    if kind in ("displaced", "squeezed"):
        beta = rng.uniform(0.2, 1.0) * np.exp(2j * np.pi * rng.uniform())
        steps.append(fock.Displacement(0, complex(beta)))
    return fock.OracleState(thermal=(s,), steps=tuple(steps), dim=dim)


def gated_recipe_pair(rng, kinds, alpha=None, gate_tol=1e-6, max_draws=60):
    """Draw 1-mode recipe pairs until the cutoff-doubling gate passes.

    A draw is accepted when the oracle divergence is finite and moving from
    the recipes' cutoff to twice that cutoff changes it by at most
    ``gate_tol``; hot, strongly squeezed draws occasionally need a larger
    cutoff than the default and are rejected.

    Returns (rho, sigma, value, rejected) with ``value`` the oracle
    divergence at the recipes' own cutoff and ``rejected`` the number of
    discarded draws.
    """
    rejected = 0
    for _ in range(max_draws):
        rho = random_recipe(rng, kinds[0])
        sigma = random_recipe(rng, kinds[1])
        if alpha is None:
            value = fock.oracle_relative_entropy(rho, sigma)
        else:
            value = fock.oracle_petz_renyi(rho, sigma, alpha)
        _, gap = fock.truncation_gated(rho, sigma, alpha=alpha)
        if np.isfinite(value) and gap <= gate_tol:
            return rho, sigma, value, rejected
        rejected += 1
    raise RuntimeError(f"no truncation-converged pair found in {max_draws} draws")
