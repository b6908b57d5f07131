"""Dense statevector execution: circuit application, unitary extraction,
amplitude readout, and seeded measurement sampling.

Gate application sweeps the full amplitude array once per gate, complex128
throughout.  Registers are capped at 20 qubits for circuit application and
12 for unitary extraction; this is a desk-scale verification backend, not
a performance simulator.
"""

from __future__ import annotations

import numpy as np

from .core import Circuit, Gate, StateVector, _local_matrix

MAX_APPLY_QUBITS = 20
MAX_UNITARY_QUBITS = 12


def _apply_gate(arr: np.ndarray, n: int, g: Gate) -> None:
    """Apply one gate in place; ``arr`` has shape (2**n,) or (2**n, batch).

    The batch axis, when present, is carried along untouched so a full
    matrix of column states evolves in one sweep.
    """
    mat = _local_matrix(g)
    shape = [2] * n + ([arr.shape[1]] if arr.ndim == 2 else [])
    view = arr.reshape(shape)
    axis = n - 1 - g.target  # axis 0 is the most significant qubit
    if g.control is None:
        moved = np.moveaxis(view, axis, 0)
        moved[...] = np.tensordot(mat, moved, axes=(1, 0))
        return
    ctrl_axis = n - 1 - g.control
    sel: list = [slice(None)] * view.ndim
    sel[ctrl_axis] = g.control_value
    sub = view[tuple(sel)]
    moved = np.moveaxis(sub, axis - (ctrl_axis < axis), 0)
    moved[...] = np.tensordot(mat, moved, axes=(1, 0))


def apply_circuit(circuit: Circuit, state: StateVector) -> StateVector:
    """Run the circuit on a copy of the state; norm is preserved."""
    if circuit.n_qubits != state.n_qubits:
        raise ValueError(
            f"circuit acts on {circuit.n_qubits} qubits but the state has {state.n_qubits}"
        )
    if circuit.n_qubits > MAX_APPLY_QUBITS:
        raise ValueError(
            f"circuit application supports at most {MAX_APPLY_QUBITS} qubits, got {circuit.n_qubits}"
        )
    work = state.amps.copy()
    for g in circuit.gates:
        _apply_gate(work, circuit.n_qubits, g)
    return StateVector(work)


def extract_unitary(circuit: Circuit) -> np.ndarray:
    """Dense matrix of the circuit; entry (i, j) is <i|U|j>.

    Column j is the circuit applied to basis state |j>; all columns evolve
    in one batched sweep per gate.
    """
    if circuit.n_qubits > MAX_UNITARY_QUBITS:
        raise ValueError(
            f"unitary extraction supports at most {MAX_UNITARY_QUBITS} qubits, "
            f"got {circuit.n_qubits}"
        )
    dim = 2**circuit.n_qubits
    mat = np.eye(dim, dtype=complex)
    for g in circuit.gates:
        _apply_gate(mat, circuit.n_qubits, g)
    return mat


def amplitude_of_zero(state: StateVector) -> complex:
    """Amplitude of the all-zeros basis state."""
    return complex(state.amps[0])


def sample_measurements(state: StateVector, shots: int, seed: int) -> dict[int, int]:
    """Histogram of ``shots`` i.i.d. basis-state draws from ``|amps|**2``.

    Returns only nonzero counts, keyed by basis index; a fixed seed fixes
    the draw exactly.
    """
    if shots < 1:
        raise ValueError(f"shots must be at least 1, got {shots}")
    rng = np.random.default_rng(seed)
    probs = np.abs(state.amps) ** 2
    probs /= probs.sum()  # absorb rounding drift so the draw is well-defined
    counts = rng.multinomial(shots, probs)
    return {int(i): int(c) for i, c in enumerate(counts) if c}
