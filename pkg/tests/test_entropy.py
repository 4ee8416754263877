import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussian_entropy import (
    binary_entropy,
    binary_relative_entropy,
    coherent_state,
    conjugate_symplectic,
    displace,
    mode_marginal,
    petz_renyi,
    relative_entropy,
    thermal_cross_term,
    thermal_mode_entropy,
    thermal_product,
    thermal_state,
    trace_power_overlap,
    vacuum_state,
    von_neumann_entropy,
)
from util import random_state, random_symplectic

probs = st.floats(0.0, 1.0, allow_nan=False)


class TestBinaryEntropy:
    def test_endpoints_and_maximum(self):
        assert binary_entropy(0.0) == 0.0
        assert binary_entropy(1.0) == 0.0
        assert abs(binary_entropy(0.5) - math.log(2)) < 1e-15

    @given(p=probs)
    @settings(max_examples=100, deadline=None)
    def test_symmetric_and_bounded(self, p):
        h = binary_entropy(p)
        assert 0 <= h <= math.log(2) + 1e-15
        assert abs(h - binary_entropy(1 - p)) < 1e-12

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            binary_entropy(1.2)


class TestBinaryRelativeEntropy:
    def test_zero_iff_equal(self):
        assert binary_relative_entropy(0.3, 0.3) == 0.0
        assert binary_relative_entropy(0.0, 0.0) == 0.0
        assert binary_relative_entropy(1.0, 1.0) == 0.0

    def test_infinite_on_support_mismatch(self):
        assert binary_relative_entropy(0.3, 0.0) == math.inf
        assert binary_relative_entropy(0.3, 1.0) == math.inf

    def test_known_value(self):
        got = binary_relative_entropy(math.exp(-1), math.exp(-2))
        assert abs(got - 0.16986028819784632) < 1e-15

    @given(p1=probs, p2=st.floats(1e-6, 1 - 1e-6, allow_nan=False))
    @settings(max_examples=100, deadline=None)
    def test_nonnegative(self, p1, p2):
        assert binary_relative_entropy(p1, p2) >= 0

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            binary_relative_entropy(-0.1, 0.5)


class TestThermalModeEntropy:
    def test_known_values(self):
        assert thermal_mode_entropy(math.inf) == 0.0
        assert abs(thermal_mode_entropy(math.log(2)) - 2 * math.log(2)) < 1e-14
        assert abs(thermal_mode_entropy(1.0) - 1.0406518522564083) < 1e-15

    def test_decreasing_in_s(self):
        values = [thermal_mode_entropy(s) for s in (0.3, 0.7, 1.5, 4.0)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            thermal_mode_entropy(0.0)


class TestVonNeumannEntropy:
    def test_pure_states_have_zero_entropy(self):
        assert von_neumann_entropy(vacuum_state(2)) == 0.0
        assert von_neumann_entropy(coherent_state(1.3 - 0.4j)) == 0.0

    def test_thermal_matches_mode_formula(self):
        got = von_neumann_entropy(thermal_state(1.0))
        assert abs(got - thermal_mode_entropy(1.0)) < 1e-14

    def test_additive_over_products(self):
        s_values = [0.6, 1.4, 2.2]
        got = von_neumann_entropy(thermal_product(s_values))
        want = sum(thermal_mode_entropy(s) for s in s_values)
        assert abs(got - want) < 1e-10

    def test_invariant_under_gaussian_unitaries(self):
        rng = np.random.default_rng(47)
        for n in (1, 2):
            state = random_state(rng, n)
            base = von_neumann_entropy(state)
            moved = conjugate_symplectic(
                displace(state, rng.normal(size=n) + 1j * rng.normal(size=n)),
                random_symplectic(rng, n),
            )
            assert abs(von_neumann_entropy(moved) - base) < 1e-8


class TestThermalCrossTerm:
    def test_vacuum_marginal(self):
        marg = mode_marginal(vacuum_state(1), 0)
        t = 1.3
        assert abs(thermal_cross_term(marg, t) - math.log1p(-math.exp(-t))) < 1e-15

    def test_self_term_is_minus_entropy(self):
        t = 0.9
        marg = mode_marginal(thermal_state(t), 0)
        assert abs(thermal_cross_term(marg, t) + thermal_mode_entropy(t)) < 1e-12

    def test_rejects_infinite_t(self):
        marg = mode_marginal(vacuum_state(1), 0)
        with pytest.raises(ValueError):
            thermal_cross_term(marg, math.inf)


class TestRelativeEntropy:
    def test_zero_on_identical_states(self):
        rng = np.random.default_rng(53)
        for n in (1, 2):
            state = random_state(rng, n)
            assert abs(relative_entropy(state, state).value) < 1e-9

    def test_thermal_pair_value(self):
        res = relative_entropy(thermal_state(1.0), thermal_state(2.0))
        assert abs(res.value - 0.26871501935110365) < 1e-14
        assert res.quantum_part == 0.0
        assert abs(res.classical_part - res.value) < 1e-15

    def test_thermal_pair_reduces_to_binary_formula(self):
        s, t = 1.0, 2.0
        res = relative_entropy(thermal_state(s), thermal_state(t))
        a = math.exp(-s)
        want = binary_relative_entropy(a, math.exp(-t)) / (1 - a)
        assert abs(res.value - want) < 1e-14

    def test_vacuum_vs_thermal_closed_form(self):
        for t in (0.7, 2.0):
            res = relative_entropy(vacuum_state(1), thermal_state(t))
            assert abs(res.value + math.log1p(-math.exp(-t))) < 1e-12
            assert abs(res.quantum_part) < 1e-12

    def test_displacement_adds_quadratic_term(self):
        s, t, beta = 1.0, 2.0, 0.4 + 0.3j
        base = relative_entropy(thermal_state(s), thermal_state(t)).value
        res = relative_entropy(displace(thermal_state(s), [beta]), thermal_state(t))
        assert abs(res.value - base - t * abs(beta) ** 2) < 1e-12
        assert abs(res.quantum_part - t * abs(beta) ** 2) < 1e-12

    def test_mixed_vs_pure_is_infinite(self):
        res = relative_entropy(thermal_state(1.0), vacuum_state(1))
        assert res.value == math.inf
        assert res.per_mode_terms == ((math.inf, math.inf),)

    def test_distinct_pure_states_infinite(self):
        res = relative_entropy(coherent_state(0.5), vacuum_state(1))
        assert res.value == math.inf

    def test_same_pure_state_zero(self):
        res = relative_entropy(coherent_state(0.5), coherent_state(0.5))
        assert abs(res.value) < 1e-12

    def test_nonnegative(self):
        rng = np.random.default_rng(59)
        for n in (1, 2):
            for _ in range(20):
                rho = random_state(rng, n)
                sigma = random_state(rng, n)
                assert relative_entropy(rho, sigma).value >= -1e-10

    def test_invariant_under_gaussian_unitaries(self):
        rng = np.random.default_rng(61)
        for n in (1, 2):
            rho = random_state(rng, n)
            sigma = random_state(rng, n)
            base = relative_entropy(rho, sigma).value
            M = random_symplectic(rng, n)
            z = rng.normal(size=n) + 1j * rng.normal(size=n)
            moved = relative_entropy(
                conjugate_symplectic(displace(rho, z), M),
                conjugate_symplectic(displace(sigma, z), M),
            ).value
            assert abs(moved - base) < 1e-8 * (1 + abs(base))

    def test_per_mode_terms_sum(self):
        rng = np.random.default_rng(67)
        rho = random_state(rng, 2)
        sigma = random_state(rng, 2)
        res = relative_entropy(rho, sigma)
        total = sum(c + q for c, q in res.per_mode_terms)
        assert abs(total - res.value) < 1e-12

    def test_mode_count_mismatch(self):
        with pytest.raises(ValueError, match="mode"):
            relative_entropy(vacuum_state(1), vacuum_state(2))


class TestPetzRenyi:
    def test_alpha_validation(self):
        for alpha in (0.0, 1.0, -0.5, 1.5):
            with pytest.raises(ValueError, match="alpha"):
                petz_renyi(thermal_state(1.0), thermal_state(2.0), alpha)

    def test_zero_on_identical_states(self):
        rng = np.random.default_rng(71)
        for n in (1, 2):
            state = random_state(rng, n)
            for alpha in (0.3, 0.5, 0.9):
                assert abs(petz_renyi(state, state, alpha).value) < 1e-9

    def test_thermal_pair_frozen_value(self):
        res = petz_renyi(thermal_state(1.0), thermal_state(2.0), 0.5)
        assert abs(res.value - 0.0991236854050328) < 1e-14
        assert abs(res.value - sum(res.terms)) < 1e-14
        assert res.terms[2] == 0.0  # zero mean, no quadratic contribution

    def test_thermal_pair_reduces_to_classical_formula(self):
        for s, t, alpha in [(1.0, 2.0, 0.5), (0.5, 3.0, 0.3), (2.5, 0.7, 0.9)]:
            got = petz_renyi(thermal_state(s), thermal_state(t), alpha).value
            x, y = math.exp(-s), math.exp(-t)
            want = (
                alpha * math.log1p(-x)
                + (1 - alpha) * math.log1p(-y)
                - math.log1p(-(x**alpha) * y ** (1 - alpha))
            ) / (alpha - 1)
            assert abs(got - want) < 1e-12

    def test_coherent_vs_vacuum_closed_form(self):
        # Both states are pure, so the overlap is |<beta|0>|^2 = e^{-|beta|^2}
        # and the divergence is |beta|^2 / (1 - alpha) for every order.
        for alpha in (0.3, 0.5, 0.9):
            res = petz_renyi(coherent_state(0.7), vacuum_state(1), alpha)
            assert abs(res.value - 0.49 / (1 - alpha)) < 1e-12
        res = petz_renyi(coherent_state(0.7), vacuum_state(1), 0.5)
        assert abs(res.value - 0.98) < 1e-12

    def test_nonnegative(self):
        rng = np.random.default_rng(73)
        for n in (1, 2):
            for _ in range(10):
                rho = random_state(rng, n)
                sigma = random_state(rng, n)
                for alpha in (0.3, 0.9):
                    assert petz_renyi(rho, sigma, alpha).value >= -1e-10

    def test_nondecreasing_in_alpha(self):
        rng = np.random.default_rng(79)
        for _ in range(10):
            rho = random_state(rng, 1)
            sigma = random_state(rng, 1)
            values = [
                petz_renyi(rho, sigma, alpha).value for alpha in (0.3, 0.5, 0.7, 0.9)
            ]
            assert all(a <= b + 1e-10 for a, b in zip(values, values[1:]))

    def test_invariant_under_gaussian_unitaries(self):
        rng = np.random.default_rng(83)
        rho = random_state(rng, 2)
        sigma = random_state(rng, 2)
        base = petz_renyi(rho, sigma, 0.6).value
        M = random_symplectic(rng, 2)
        z = rng.normal(size=2) + 1j * rng.normal(size=2)
        moved = petz_renyi(
            conjugate_symplectic(displace(rho, z), M),
            conjugate_symplectic(displace(sigma, z), M),
            0.6,
        ).value
        assert abs(moved - base) < 1e-8 * (1 + abs(base))

    def test_approaches_relative_entropy(self):
        rho = displace(thermal_state(1.0), [0.3 + 0.1j])
        sigma = thermal_state(1.6)
        limit = relative_entropy(rho, sigma).value
        gaps = [
            abs(petz_renyi(rho, sigma, alpha).value - limit)
            for alpha in (0.9, 0.99, 0.999)
        ]
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < 1e-2

    def test_mode_count_mismatch(self):
        with pytest.raises(ValueError, match="mode"):
            petz_renyi(vacuum_state(2), vacuum_state(1), 0.5)


class TestTracePowerOverlap:
    def test_matches_divergence_identity(self):
        rng = np.random.default_rng(89)
        for _ in range(10):
            rho = random_state(rng, 2)
            sigma = random_state(rng, 2)
            alpha = rng.uniform(0.1, 0.9)
            overlap = trace_power_overlap(rho, sigma, alpha)
            value = petz_renyi(rho, sigma, alpha).value
            assert abs(value - math.log(overlap) / (alpha - 1)) < 1e-10

    def test_bounded_and_tight_at_equality(self):
        rng = np.random.default_rng(97)
        state = random_state(rng, 1)
        assert abs(trace_power_overlap(state, state, 0.4) - 1.0) < 1e-9
        other = random_state(rng, 1)
        assert 0 < trace_power_overlap(state, other, 0.4) <= 1 + 1e-12

    def test_coherent_overlap(self):
        got = trace_power_overlap(coherent_state(0.7), vacuum_state(1), 0.5)
        assert abs(got - math.exp(-0.49)) < 1e-12
