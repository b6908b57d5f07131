import math

import numpy as np
import pytest

from conftest import random_state

from ampsum.apps import (
    IntegrationSpec,
    Parity,
    even_odd_partial_sum,
    integrate_midpoint,
    midpoints,
    partial_sum_via_circuit,
    tensor_weighted_sum,
)
from ampsum.core import basis_state, state_from_amplitudes
from ampsum.oracle import brute_force_partial_sum


class TestPartialSumViaCircuit:
    def test_plateau_m10(self, plateau_state):
        c0, total = partial_sum_via_circuit(plateau_state, 10)
        expect = 1.0 + 1.0 / math.sqrt(8.0)
        assert total == pytest.approx(expect, abs=1e-12)
        assert c0 == pytest.approx(expect / math.sqrt(10.0), abs=1e-12)

    def test_plateau_m13(self, plateau_state):
        _, total = partial_sum_via_circuit(plateau_state, 13)
        assert total == pytest.approx(
            1.0 + 1.0 / math.sqrt(2.0) + 1.0 / math.sqrt(8.0), abs=1e-12
        )

    def test_full_sum_of_uniform_state(self):
        n = 5
        s = state_from_amplitudes(np.ones(2**n), normalize=True)
        c0, total = partial_sum_via_circuit(s, 2**n)
        assert c0 == pytest.approx(1.0, abs=1e-12)
        assert total == pytest.approx(math.sqrt(2**n), abs=1e-11)

    def test_matches_brute_force_on_random_states(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            n = int(rng.integers(2, 9))
            m = int(rng.integers(2, 2**n + 1))
            state = random_state(rng, n)
            _, total = partial_sum_via_circuit(state, m)
            assert abs(total - brute_force_partial_sum(state, m)) <= 1e-10


class TestIntegrateMidpoint:
    def test_sine_prefix_value(self):
        spec = IntegrationSpec.from_function(lambda t: math.sin(math.pi * t), 4, 12)
        assert integrate_midpoint(spec) == pytest.approx(0.5442628374252914, abs=1e-12)

    def test_sine_close_to_closed_form(self):
        spec = IntegrationSpec.from_function(lambda t: math.sin(math.pi * t), 4, 12)
        exact = (1.0 + math.sqrt(2.0) / 2.0) / math.pi
        assert abs(integrate_midpoint(spec) - exact) < 1e-2

    def test_constant_integrand(self):
        for n, m in ((3, 5), (4, 16), (5, 2)):
            spec = IntegrationSpec(n, m, np.ones(2**n))
            assert integrate_midpoint(spec) == pytest.approx(m / 2**n, abs=1e-12)

    def test_full_prefix_equals_plain_midpoint_rule(self):
        rng = np.random.default_rng(30)
        for n in (3, 5, 7):
            samples = rng.uniform(-1.0, 2.0, size=2**n)
            spec = IntegrationSpec(n, 2**n, samples)
            assert integrate_midpoint(spec) == pytest.approx(
                samples.sum() / 2**n, abs=1e-12
            )

    def test_midpoints_interior_and_increasing(self):
        xs = midpoints(4)
        assert xs[0] > 0.0 and xs[-1] < 1.0
        assert np.all(np.diff(xs) > 0)
        assert xs[0] == pytest.approx(1.0 / 32.0)

    def test_sample_count_must_match(self):
        with pytest.raises(ValueError, match="expected 2\\*\\*3 samples"):
            IntegrationSpec(3, 4, np.ones(4))

    def test_zero_samples_rejected(self):
        with pytest.raises(ValueError, match="zero norm"):
            IntegrationSpec(3, 4, np.zeros(8))

    def test_m_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="2 <= M <= 2\\*\\*n"):
            IntegrationSpec(3, 9, np.ones(8))


class TestEvenOddPartialSum:
    def test_even_picks_index_zero(self):
        _, total = even_odd_partial_sum(basis_state(4, 0), 2, Parity.EVEN)
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_odd_picks_index_one(self):
        _, total = even_odd_partial_sum(basis_state(4, 1), 2, Parity.ODD)
        assert total == pytest.approx(1.0, abs=1e-12)

    def test_parity_accepts_strings(self, plateau_state):
        _, by_enum = even_odd_partial_sum(plateau_state, 4, Parity.EVEN)
        _, by_name = even_odd_partial_sum(plateau_state, 4, "even")
        assert by_enum == by_name

    def test_matches_brute_force_interleaved(self):
        rng = np.random.default_rng(40)
        for _ in range(50):
            state = random_state(rng, 4)
            m = int(rng.integers(2, 9))
            _, even = even_odd_partial_sum(state, m, Parity.EVEN)
            _, odd = even_odd_partial_sum(state, m, Parity.ODD)
            assert abs(even - state.amps[0:2 * m:2].sum()) <= 1e-10
            assert abs(odd - state.amps[1:2 * m:2].sum()) <= 1e-10
            assert abs(even + odd - brute_force_partial_sum(state, 2 * m)) <= 1e-10

    def test_m_out_of_range_rejected(self):
        with pytest.raises(ValueError, match="2 <= M <= 2\\*\\*n"):
            even_odd_partial_sum(basis_state(3), 5, Parity.EVEN)


class TestTensorWeightedSum:
    def test_identity_block_reduces_to_even_case(self):
        rng = np.random.default_rng(50)
        state = random_state(rng, 5)
        c0_even, _ = even_odd_partial_sum(state, 6, Parity.EVEN)
        assert tensor_weighted_sum(state, 6, np.eye(2)) == pytest.approx(c0_even, abs=1e-12)

    def test_pauli_x_block_selects_odd_entries(self):
        rng = np.random.default_rng(51)
        state = random_state(rng, 4)
        c0 = tensor_weighted_sum(state, 3, np.array([[0, 1], [1, 0]], dtype=complex))
        expect = state.amps[1:6:2].sum() / math.sqrt(3.0)
        assert c0 == pytest.approx(expect, abs=1e-10)

    def test_hadamard_block_sums_everything(self):
        rng = np.random.default_rng(52)
        state = random_state(rng, 4)
        had = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2.0)
        c0 = tensor_weighted_sum(state, 3, had)
        expect = state.amps[:6].sum() / (math.sqrt(3.0) * math.sqrt(2.0))
        assert c0 == pytest.approx(expect, abs=1e-10)

    def test_wide_block_closed_form(self):
        # a 4x4 unitary weights amplitudes by its first row, cyclically
        rng = np.random.default_rng(53)
        state = random_state(rng, 5)
        gram = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        v, _ = np.linalg.qr(gram)
        m = 5
        c0 = tensor_weighted_sum(state, m, v)
        ks = np.arange(4 * m)
        expect = (v[0, ks % 4] * state.amps[: 4 * m]).sum() / math.sqrt(m)
        assert c0 == pytest.approx(expect, abs=1e-10)

    def test_non_square_block_rejected(self):
        with pytest.raises(ValueError, match="square"):
            tensor_weighted_sum(basis_state(3), 2, np.ones((2, 3)))

    def test_block_must_leave_room_for_sum_register(self):
        with pytest.raises(ValueError, match="no qubits left"):
            tensor_weighted_sum(basis_state(2), 2, np.eye(4))

    def test_odd_dimension_block_rejected(self):
        with pytest.raises(ValueError, match="power of two"):
            tensor_weighted_sum(basis_state(4), 2, np.eye(3))
