"""Closed-form layer against the truncated Fock-space oracle.

Every recipe carries two synchronised views of the same state: a truncated
density matrix and an exact (mean, covariance) pair.  These tests check that
the views agree at the level of characteristic functions, and that the
closed-form entropies and divergences match the oracle's spectral sums once
the oracle's truncation has converged.
"""

import math
from dataclasses import replace

import numpy as np
import pytest

from gaussian_entropy import (
    characteristic_function,
    petz_renyi,
    relative_entropy,
    von_neumann_entropy,
)
from gaussian_entropy.fock import (
    Beamsplitter,
    Displacement,
    OracleState,
    Rotation,
    Squeeze,
    oracle_char_fn,
    oracle_petz_renyi,
    oracle_relative_entropy,
    oracle_von_neumann_entropy,
    truncation_gated,
)
from util import gated_recipe_pair, random_recipe

RECIPE_KINDS = ("thermal", "displaced", "squeezed")


def one_mode_grid():
    pts = (-1.2, -0.4, 0.3, 0.9)
    return [complex(x, y) for x in pts for y in pts]


class TestCharacteristicFunctionViews:
    @pytest.mark.parametrize("kind", RECIPE_KINDS)
    def test_one_mode(self, kind):
        rng = np.random.default_rng(200 + RECIPE_KINDS.index(kind))
        recipe = random_recipe(rng, kind)
        rho = recipe.fock_density()
        state = recipe.gaussian_state()
        worst = max(
            abs(oracle_char_fn(rho, [u]) - characteristic_function(state, [u]))
            for u in one_mode_grid()
        )
        assert worst < 1e-6

    def test_one_mode_mixed_steps(self):
        recipe = OracleState(
            thermal=(0.8,),
            steps=(
                Squeeze(0, 0.5, 0.7),
                Rotation(0, 1.1),
                Displacement(0, 0.6 - 0.3j),
            ),
            dim=60,
        )
        rho = recipe.fock_density()
        state = recipe.gaussian_state()
        worst = max(
            abs(oracle_char_fn(rho, [u]) - characteristic_function(state, [u]))
            for u in one_mode_grid()
        )
        assert worst < 1e-6

    def test_two_mode(self):
        recipe = OracleState(
            thermal=(1.0, 1.8),
            steps=(
                Squeeze(0, 0.4, 0.3),
                Beamsplitter(0.7),
                Displacement(1, 0.5 + 0.2j),
                Rotation(0, 0.9),
            ),
            dim=28,
        )
        rho = recipe.fock_density()
        state = recipe.gaussian_state()
        rng = np.random.default_rng(2024)
        worst = 0.0
        for _ in range(12):
            u = 0.7 * (rng.normal(size=2) + 1j * rng.normal(size=2))
            worst = max(
                worst,
                abs(oracle_char_fn(rho, u) - characteristic_function(state, u)),
            )
        assert worst < 1e-5


class TestEntropyAgreement:
    @pytest.mark.parametrize("kind", RECIPE_KINDS)
    def test_one_mode(self, kind):
        rng = np.random.default_rng(7 + RECIPE_KINDS.index(kind))
        recipe = random_recipe(rng, kind)
        closed = von_neumann_entropy(recipe.gaussian_state())
        oracle = oracle_von_neumann_entropy(recipe)
        assert abs(closed - oracle) < 1e-6

    def test_two_mode(self):
        recipe = OracleState(
            thermal=(1.2, 0.9),
            steps=(Beamsplitter(0.5), Squeeze(1, 0.3)),
            dim=24,
        )
        closed = von_neumann_entropy(recipe.gaussian_state())
        oracle = oracle_von_neumann_entropy(recipe)
        assert abs(closed - oracle) < 1e-6


class TestRelativeEntropyAgreement:
    def test_one_mode_pairs(self):
        rng = np.random.default_rng(314)
        for i in range(6):
            kinds = (RECIPE_KINDS[i % 3], RECIPE_KINDS[(i + 1) % 3])
            rho, sigma, oracle, _ = gated_recipe_pair(rng, kinds)
            closed = relative_entropy(
                rho.gaussian_state(), sigma.gaussian_state()
            ).value
            assert abs(closed - oracle) < 1e-5, f"pair {i} ({kinds})"

    def test_two_mode_pair(self):
        rho = OracleState(
            thermal=(1.1, 1.6),
            steps=(Beamsplitter(0.6), Displacement(0, 0.4 - 0.1j)),
            dim=28,
        )
        sigma = OracleState(
            thermal=(1.4, 2.0),
            steps=(Squeeze(0, 0.25), Beamsplitter(0.9)),
            dim=28,
        )
        closed = relative_entropy(rho.gaussian_state(), sigma.gaussian_state()).value
        oracle = oracle_relative_entropy(rho, sigma)
        assert abs(closed - oracle) < 1e-5

    def test_infinite_cases_agree(self):
        rho = OracleState(thermal=(1.0,), dim=40)
        sigma = OracleState(thermal=(math.inf,), dim=40)
        closed = relative_entropy(rho.gaussian_state(), sigma.gaussian_state()).value
        oracle, gap = truncation_gated(rho, sigma)
        assert closed == math.inf
        assert oracle == math.inf
        assert gap == 0.0


class TestPetzRenyiAgreement:
    @pytest.mark.parametrize("alpha", [0.3, 0.5, 0.9])
    def test_one_mode_pairs(self, alpha):
        rng = np.random.default_rng(int(1000 * alpha))
        for i in range(3):
            kinds = (RECIPE_KINDS[i % 3], RECIPE_KINDS[(i + 2) % 3])
            rho, sigma, oracle, _ = gated_recipe_pair(rng, kinds, alpha=alpha)
            closed = petz_renyi(
                rho.gaussian_state(), sigma.gaussian_state(), alpha
            ).value
            assert abs(closed - oracle) < 1e-5, f"pair {i} ({kinds})"

    def test_two_mode_pair(self):
        rho = OracleState(
            thermal=(1.0, 1.5),
            steps=(Squeeze(1, 0.3, 0.4), Beamsplitter(0.8)),
            dim=20,
        )
        sigma = OracleState(
            thermal=(1.8, 1.2),
            steps=(Beamsplitter(0.5), Displacement(1, 0.3 + 0.3j)),
            dim=20,
        )
        closed = petz_renyi(rho.gaussian_state(), sigma.gaussian_state(), 0.5).value
        oracle = oracle_petz_renyi(rho, sigma, 0.5)
        assert abs(closed - oracle) < 1e-5

    def test_hard_pair_converges_to_closed_form(self):
        # Hot, strongly squeezed reference at alpha near 1: the slowest
        # truncation corner of the parameter box.  The default cutoff is not
        # converged (which is what the cutoff-doubling gate detects), yet the
        # oracle limit is the closed-form value.
        rho = OracleState(thermal=(0.52,), dim=60)
        sigma = OracleState(
            thermal=(0.61,),
            steps=(Squeeze(0, 0.74, 0.51), Displacement(0, -0.81 + 0.01j)),
            dim=60,
        )
        alpha = 0.9
        closed = petz_renyi(rho.gaussian_state(), sigma.gaussian_state(), alpha).value
        coarse = oracle_petz_renyi(rho, sigma, alpha)
        fine = oracle_petz_renyi(
            replace(rho, dim=240), replace(sigma, dim=240), alpha
        )
        assert abs(closed - coarse) > 1e-5
        assert abs(closed - fine) < 1e-9
