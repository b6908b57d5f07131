"""Shared fixtures and brute-force references.

``kron_unitary`` builds circuit matrices from explicit Kronecker products
and stays deliberately independent of the package's in-place gate sweeps:
simulator tests check the two routes against each other.
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from ampsum.core import Circuit, Gate, GateKind, StateVector, h, ry, state_from_amplitudes, x

_I = np.eye(2, dtype=complex)
_P0 = np.diag([1.0, 0.0]).astype(complex)
_P1 = np.diag([0.0, 1.0]).astype(complex)
_H = np.array([[1.0, 1.0], [1.0, -1.0]], dtype=complex) / math.sqrt(2.0)
_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)


def _local(gate: Gate) -> np.ndarray:
    if gate.kind is GateKind.H:
        return _H
    if gate.kind is GateKind.X:
        return _X
    c, s = math.cos(gate.theta / 2.0), math.sin(gate.theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def kron_gate(gate: Gate, n: int) -> np.ndarray:
    """Full 2**n matrix of one gate, assembled factor by factor."""
    local = _local(gate)
    if gate.control is None:
        out = np.array([[1.0]], dtype=complex)
        for q in range(n - 1, -1, -1):
            out = np.kron(out, local if q == gate.target else _I)
        return out
    fire = _P0 if gate.control_value == 0 else _P1
    idle = _P1 if gate.control_value == 0 else _P0
    active = np.array([[1.0]], dtype=complex)
    passive = np.array([[1.0]], dtype=complex)
    for q in range(n - 1, -1, -1):
        if q == gate.control:
            active = np.kron(active, fire)
            passive = np.kron(passive, idle)
        elif q == gate.target:
            active = np.kron(active, local)
            passive = np.kron(passive, _I)
        else:
            active = np.kron(active, _I)
            passive = np.kron(passive, _I)
    return active + passive


def kron_unitary(circuit: Circuit) -> np.ndarray:
    total = np.eye(2**circuit.n_qubits, dtype=complex)
    for g in circuit.gates:
        total = kron_gate(g, circuit.n_qubits) @ total
    return total


def random_state(rng: np.random.Generator, n: int) -> StateVector:
    amps = rng.normal(size=2**n) + 1j * rng.normal(size=2**n)
    return state_from_amplitudes(amps, normalize=True)


def random_circuit(rng: np.random.Generator, n: int, n_gates: int) -> Circuit:
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
            gates.append(ry(rng.uniform(0.0, 2.0 * math.pi), target,
                            control=control, control_value=control_value))
    return Circuit(n, tuple(gates))


def plateau_amplitudes() -> np.ndarray:
    """Unit-norm 16-amplitude vector with dyadic plateau levels."""
    amps = np.zeros(16, dtype=complex)
    amps[0:8] = 1.0 / math.sqrt(64.0)
    amps[8:12] = 1.0 / math.sqrt(32.0)
    amps[12:14] = 1.0 / math.sqrt(8.0)
    amps[14] = 1.0 / math.sqrt(2.0)
    return amps


@pytest.fixture
def plateau_state() -> StateVector:
    return StateVector(plateau_amplitudes())
