"""Invariant sweep behind the ``verify`` CLI command.

Runs every library invariant over all M in [2, 2**n] for n = 2..n_max:
decomposition arithmetic, gate budgets and depth bounds, analytic first
rows against extracted unitaries, inverse/uniform-superposition behavior,
weighted-circuit oracles on seeded random weight vectors, the application
layer (partial sums, even/odd sums, tensor readouts, quadrature identity),
circuit-text round trips, and a binomial sampling check.

Scopes follow the contracts: unitary extraction checks stop at n = 8 and
full unitarity spot checks at n = 6; decomposition and oracle checks run to
n_max (capped at 10).  All randomness flows from one seeded generator, so
output is byte-identical across runs with equal arguments.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import apps, formats, oracle
from .build import (
    WeightSpec,
    build_partial_sum_circuit,
    build_weighted_circuit,
    decompose,
    expected_gate_count,
)
from .core import Circuit, GateKind, StateVector, basis_state, h, ry, state_from_amplitudes, x
from .simulate import amplitude_of_zero, apply_circuit, extract_unitary, sample_measurements

MAX_SWEEP_QUBITS = 10
_SIM_N_CAP = 8       # unitary-extraction / circuit-application checks
_UNITARITY_N_CAP = 6


@dataclass(frozen=True)
class Failure:
    m: int
    n: int
    invariant: str
    deviation: float


class _Recorder:
    def __init__(self, report: Callable[[str], None]):
        self.failures: list[Failure] = []
        self.checks = 0
        self._report = report

    def check(self, m: int, n: int, invariant: str, deviation: float, tol: float) -> None:
        self.checks += 1
        if not deviation <= tol:  # catches NaN as well
            self.failures.append(Failure(m, n, invariant, float(deviation)))
            self._report(f"FAIL (M={m}, n={n}, {invariant}, max deviation {deviation:.3e})")


def _random_state(rng: np.random.Generator, n: int) -> StateVector:
    amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return state_from_amplitudes(amps, normalize=True)


def _random_circuit(rng: np.random.Generator, n: int, n_gates: int) -> Circuit:
    gates = []
    for _ in range(n_gates):
        kind = rng.integers(0, 3)
        target = int(rng.integers(0, n))
        control = None
        control_value = 1
        if n > 1 and rng.random() < 0.5:
            control = int(rng.integers(0, n - 1))
            if control >= target:
                control += 1
            control_value = int(rng.integers(0, 2))
        if kind == 0:
            gates.append(h(target, control=control, control_value=control_value))
        elif kind == 1:
            gates.append(x(target, control=control, control_value=control_value))
        else:
            gates.append(ry(rng.uniform(0, 2 * math.pi), target, control=control,
                            control_value=control_value))
    return Circuit(n, tuple(gates))


def _check_static(rec: _Recorder, m: int, n: int) -> None:
    decomp = decompose(m, n)
    rec.check(m, n, "decompose-bit-sum", abs(sum(2**b for b in decomp.set_bits) - m), 0)
    running = 0
    dev = 0
    for j, total in enumerate(decomp.prefix_sums):
        running += 2 ** decomp.set_bits[j]
        dev = max(dev, abs(total - running))
    rec.check(m, n, "decompose-prefix-sums", dev, 0)
    if decomp.k >= 1:
        rec.check(m, n, "decompose-lowest-power",
                  abs(decomp.prefix_sums[0] - 2 ** decomp.set_bits[0]), 0)
        # acos arguments stay in [0, 1]: each power fits in what remains of m
        domain_ok = decomp.prefix_sums[0] <= m and all(
            2 ** decomp.set_bits[j] <= m - decomp.prefix_sums[j - 1]
            for j in range(1, decomp.k)
        )
        rec.check(m, n, "angle-domain", 0 if domain_ok else 1, 0)

    circuit = build_partial_sum_circuit(m, n)
    rec.check(m, n, "gate-count", abs(len(circuit.gates) - expected_gate_count(m, n)), 0)
    popcount = decomp.k + 1
    depth_ok = circuit.depth() <= len(circuit.gates) <= 2 * n + 2 * popcount
    rec.check(m, n, "depth-bound", 0 if depth_ok else 1, 0)
    thetas_ok = all(
        0.0 <= g.theta <= math.pi for g in circuit.gates if g.kind is GateKind.RY
    )
    rec.check(m, n, "angle-range", 0 if thetas_ok else 1, 0)

    rec.check(m, n, "text-round-trip",
              0 if formats.circuit_from_text(formats.circuit_to_text(circuit)) == circuit else 1, 0)

    if decomp.k >= 1:
        restricted = build_weighted_circuit(m, n, WeightSpec.uniform(decomp))
        dev = 0.0
        for g1, g2 in zip(circuit.gates, restricted.gates):
            same = (g1.kind, g1.target, g1.control, g1.control_value) == \
                   (g2.kind, g2.target, g2.control, g2.control_value)
            dev = max(dev, abs(g1.theta - g2.theta) if same else math.inf)
        if len(circuit.gates) != len(restricted.gates):
            dev = math.inf
        rec.check(m, n, "restricted-weights-match-plain", dev, 1e-12)


def _check_oracle(rec: _Recorder, rng: np.random.Generator, m: int, n: int,
                  trials: int) -> None:
    row = oracle.predicted_first_row(m, n)
    rec.check(m, n, "oracle-row-norm", abs(np.dot(row, row) - 1.0), 1e-12)
    rec.check(m, n, "oracle-zero-tail", float(np.abs(row[m:]).max(initial=0.0)), 0)

    decomp = decompose(m, n)
    if decomp.k == 0:
        return
    restricted = oracle.predicted_first_row(m, n, WeightSpec.uniform(decomp))
    rec.check(m, n, "oracle-restricted-row", float(np.abs(restricted - row).max()), 1e-12)
    edges = oracle.segment_boundaries(decomp)
    rec.check(m, n, "segment-edges",
              0 if (edges[-1] == m and all(a < b for a, b in zip(edges, edges[1:]))) else 1, 0)
    for _ in range(trials):
        weights = WeightSpec(tuple(rng.uniform(-1.0, 1.0, size=decomp.k)))
        wrow = oracle.predicted_first_row(m, n, weights)
        rec.check(m, n, "oracle-weighted-norm", abs(np.dot(wrow, wrow) - 1.0), 1e-12)
        f = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
        coeffs = oracle.segment_weights(decomp, weights)
        by_segment = sum(
            coeffs[decomp.k - r] * f[edges[r]:edges[r + 1]].sum()
            for r in range(decomp.k + 1)
        )
        rec.check(m, n, "oracle-segment-sum", abs(np.dot(wrow, f) - by_segment), 1e-10)


def _check_simulator(rec: _Recorder, rng: np.random.Generator, m: int, n: int,
                     trials: int) -> None:
    circuit = build_partial_sum_circuit(m, n)
    predicted = oracle.predicted_first_row(m, n)
    unitary = extract_unitary(circuit)
    rec.check(m, n, "first-row", float(np.abs(unitary[0].real - predicted).max()), 1e-10)
    rec.check(m, n, "first-row-imag", float(np.abs(unitary[0].imag).max()), 1e-10)

    if n <= _UNITARITY_N_CAP:
        gram = unitary @ unitary.conj().T
        rec.check(m, n, "unitarity", float(np.abs(gram - np.eye(2**n)).max()), 1e-10)

    # dagger on |0> prepares the uniform superposition over the first m states
    uniform = apply_circuit(circuit.dagger(), basis_state(n))
    target = np.zeros(2**n, dtype=complex)
    target[:m] = 1.0 / math.sqrt(m)
    rec.check(m, n, "dagger-uniform", float(np.abs(uniform.amps - target).max()), 1e-10)

    f = _random_state(rng, n)
    out = apply_circuit(circuit, f)
    rec.check(m, n, "norm-preservation", abs(np.linalg.norm(out.amps) - 1.0), 1e-12)
    restored = apply_circuit(circuit.dagger(), out)
    rec.check(m, n, "inverse-composition", float(np.abs(restored.amps - f.amps).max()), 1e-10)
    c0 = amplitude_of_zero(out)
    rec.check(m, n, "linearity", abs(c0 - np.dot(predicted, f.amps)), 1e-10)
    brute = oracle.brute_force_partial_sum(f, m)
    rec.check(m, n, "scaled-partial-sum", abs(math.sqrt(m) * c0 - brute), 1e-10)

    decomp = decompose(m, n)
    if decomp.k == 0:
        return
    for _ in range(trials):
        weights = WeightSpec(tuple(rng.uniform(-1.0, 1.0, size=decomp.k)))
        wrow = oracle.predicted_first_row(m, n, weights)
        wunitary = extract_unitary(build_weighted_circuit(m, n, weights))
        dev = max(float(np.abs(wunitary[0].real - wrow).max()),
                  float(np.abs(wunitary[0].imag).max()))
        rec.check(m, n, "weighted-first-row", dev, 1e-10)


def _check_random_circuits(rec: _Recorder, rng: np.random.Generator, n: int) -> None:
    for _ in range(3):
        circuit = _random_circuit(rng, n, 50)
        state = _random_state(rng, n)
        out = apply_circuit(circuit, state)
        rec.check(0, n, "random-circuit-norm", abs(np.linalg.norm(out.amps) - 1.0), 1e-12)
        back = apply_circuit(circuit.dagger(), out)
        rec.check(0, n, "random-circuit-inverse",
                  float(np.abs(back.amps - state.amps).max()), 1e-10)


def _check_apps(rec: _Recorder, rng: np.random.Generator, n: int) -> None:
    # even/odd sums on states over n+1 qubits
    for _ in range(3):
        state = _random_state(rng, n + 1)
        m = int(rng.integers(2, 2**n + 1))
        _, even = apps.even_odd_partial_sum(state, m, apps.Parity.EVEN)
        _, odd = apps.even_odd_partial_sum(state, m, apps.Parity.ODD)
        rec.check(m, n, "even-sum", abs(even - state.amps[0:2 * m:2].sum()), 1e-10)
        rec.check(m, n, "odd-sum", abs(odd - state.amps[1:2 * m:2].sum()), 1e-10)
        rec.check(m, n, "even-plus-odd",
                  abs((even + odd) - oracle.brute_force_partial_sum(state, 2 * m)), 1e-10)

        c0_i = apps.tensor_weighted_sum(state, m, np.eye(2))
        c0_x = apps.tensor_weighted_sum(state, m, np.array([[0, 1], [1, 0]], dtype=complex))
        had = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)
        c0_h = apps.tensor_weighted_sum(state, m, had)
        root_m = math.sqrt(m)
        rec.check(m, n, "tensor-identity", abs(c0_i - state.amps[0:2 * m:2].sum() / root_m), 1e-10)
        rec.check(m, n, "tensor-x", abs(c0_x - state.amps[1:2 * m:2].sum() / root_m), 1e-10)
        rec.check(m, n, "tensor-h",
                  abs(c0_h - state.amps[:2 * m].sum() / (root_m * math.sqrt(2))), 1e-10)

    # full-prefix quadrature reduces to the plain midpoint rule
    samples = rng.uniform(0.1, 1.0, size=2**n)
    spec = apps.IntegrationSpec(n, 2**n, samples)
    rec.check(2**n, n, "full-interval-quadrature",
              abs(apps.integrate_midpoint(spec) - spec.dx * samples.sum()), 1e-12)
    m = int(rng.integers(2, 2**n + 1))
    ones = apps.IntegrationSpec(n, m, np.ones(2**n))
    rec.check(m, n, "constant-quadrature",
              abs(apps.integrate_midpoint(ones) - m / 2**n), 1e-12)


def _plateau_state() -> StateVector:
    """16-amplitude demo vector with dyadic plateaus (exactly unit norm)."""
    amps = np.zeros(16, dtype=complex)
    amps[0:8] = 1.0 / math.sqrt(64.0)
    amps[8:12] = 1.0 / math.sqrt(32.0)
    amps[12:14] = 1.0 / math.sqrt(8.0)
    amps[14] = 1.0 / math.sqrt(2.0)
    return StateVector(amps)


def _check_sampling(rec: _Recorder, seed: int) -> None:
    state = _plateau_state()
    out = apply_circuit(build_partial_sum_circuit(10, 4), state)
    p = abs(amplitude_of_zero(out)) ** 2
    shots = 1_000_000
    counts = sample_measurements(out, shots, seed=seed)
    freq = counts.get(0, 0) / shots
    sigma = math.sqrt(p * (1.0 - p) / shots)
    rec.check(10, 4, "sampling-three-sigma", abs(freq - p), 3.0 * sigma)


def run_sweep(
    n_max: int,
    weighted_trials: int = 25,
    seed: int = 2024,
    report: Callable[[str], None] = print,
) -> list[Failure]:
    """Run the whole invariant sweep; returns the list of failures."""
    if not 2 <= n_max <= MAX_SWEEP_QUBITS:
        raise ValueError(f"n-max must satisfy 2 <= n-max <= {MAX_SWEEP_QUBITS}, got {n_max}")
    if weighted_trials < 0:
        raise ValueError(f"weighted-trials must be non-negative, got {weighted_trials}")
    rec = _Recorder(report)
    rng = np.random.default_rng(seed)
    for n in range(2, n_max + 1):
        for m in range(2, 2**n + 1):
            _check_static(rec, m, n)
            _check_oracle(rec, rng, m, n, weighted_trials)
            if n <= _SIM_N_CAP:
                _check_simulator(rec, rng, m, n, weighted_trials)
        if n <= _SIM_N_CAP:
            _check_random_circuits(rec, rng, n)
            _check_apps(rec, rng, n)
        report(f"n={n}: swept M=2..{2**n}, cumulative failures: {len(rec.failures)}")
    _check_sampling(rec, seed)
    report(f"ran {rec.checks} checks, {len(rec.failures)} failures")
    return rec.failures
