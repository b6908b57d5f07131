"""Synthesis of partial-sum and weighted-partial-sum readout circuits.

``build_partial_sum_circuit(m, n)`` returns a circuit on n qubits whose
unitary has first row ``(1/sqrt(m)) * [1 ... 1 0 ... 0]`` with m ones, so
applying it to a state leaves ``(1/sqrt(m)) * sum(amps[:m])`` in the
amplitude of |0>.  ``build_weighted_circuit`` frees the rotation angles:
caller-chosen weights ``b_j`` turn the constant first row into a staircase
of per-segment coefficients over the dyadic blocks of ``[0, m)``.

The construction works on the binary decomposition ``m = sum_j 2**bit_j``.
When m is a power of two a Hadamard layer on the low qubits suffices.
Otherwise a cascade of negatively controlled Hadamard blocks splits the
index range into one dyadic segment per set bit, one rotation per segment
boundary fixes the segment coefficients, and a closing layer of X gates
moves the result onto row 0.  The gate count is exactly ``r`` for
``m == 2**r`` and ``high_bit + 2*(popcount-1)`` otherwise.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .core import Circuit, Gate, h, ry, x


@dataclass(frozen=True)
class BitDecomposition:
    """Set-bit positions of m plus the partial totals driving angle choices.

    ``set_bits`` is ascending, so ``set_bits[-1]`` is the position of the
    highest set bit.  ``prefix_sums[j]`` is the sum of the j+1 lowest powers
    of two in m; it has one entry per set bit except the highest.
    """

    m: int
    n: int
    set_bits: tuple[int, ...]
    prefix_sums: tuple[int, ...]

    @property
    def k(self) -> int:
        """Number of set bits minus one."""
        return len(self.set_bits) - 1

    @property
    def high_bit(self) -> int:
        return self.set_bits[-1]


def decompose(m: int, n: int) -> BitDecomposition:
    """Split m into its set-bit positions for an n-qubit register.

    Requires ``2 <= m <= 2**n``.
    """
    if n < 1:
        raise ValueError(f"need at least one qubit, got n={n}")
    if not 2 <= m <= 2**n:
        raise ValueError(f"M must satisfy 2 <= M <= 2**n, got M={m} with n={n}")
    set_bits = tuple(i for i in range(m.bit_length()) if (m >> i) & 1)
    prefix_sums = tuple(itertools.accumulate(2**b for b in set_bits))[:-1]
    return BitDecomposition(m, n, set_bits, prefix_sums)


@dataclass(frozen=True)
class WeightSpec:
    """Rotation weights ``b_0 .. b_{k-1}``, each in [-1, 1].

    The complementary factors ``a_j = sqrt(1 - b_j**2)`` are derived, so
    ``a_j**2 + b_j**2 == 1`` by construction.
    """

    b: tuple[float, ...]

    def __post_init__(self) -> None:
        vals = tuple(float(v) for v in self.b)
        object.__setattr__(self, "b", vals)
        for v in vals:
            if not math.isfinite(v) or abs(v) > 1.0:
                raise ValueError(f"weights must lie in [-1, 1], got {v}")

    @property
    def a(self) -> tuple[float, ...]:
        return tuple(math.sqrt(1.0 - v * v) for v in self.b)

    @classmethod
    def uniform(cls, decomp: BitDecomposition) -> "WeightSpec":
        """Weights that flatten every segment coefficient to 1/sqrt(m).

        With these values the weighted circuit coincides gate-for-gate with
        ``build_partial_sum_circuit``.
        """
        if decomp.k == 0:
            return cls(())
        vals = [math.sqrt(decomp.prefix_sums[0] / decomp.m)]
        for j in range(1, decomp.k):
            vals.append(
                math.sqrt(2 ** decomp.set_bits[j] / (decomp.m - decomp.prefix_sums[j - 1]))
            )
        return cls(tuple(vals))


def weighted_decomposition(m: int, n: int, weights: WeightSpec) -> BitDecomposition:
    """Validate the weighted-circuit preconditions and decompose m.

    Requires ``2 < m < 2**n``, m not a power of two, and one weight per set
    bit except the highest.
    """
    if not 2 < m < 2**n:
        raise ValueError(f"M must satisfy 2 < M < 2**n, got M={m} with n={n}")
    if m & (m - 1) == 0:
        raise ValueError(f"M must not be a power of two, got M={m}")
    decomp = decompose(m, n)
    if len(weights.b) != decomp.k:
        raise ValueError(
            f"M={m} needs exactly {decomp.k} weights, got {len(weights.b)}"
        )
    return decomp


def _cascade(decomp: BitDecomposition, thetas: list[float]) -> tuple[Gate, ...]:
    """Gate sequence of the general branch; thetas[j] pairs with set bit j."""
    bits = decomp.set_bits
    k = decomp.k
    gates: list[Gate] = []
    for j in range(k - 1, 0, -1):
        for i in range(bits[j + 1] - 1, bits[j] - 1, -1):
            gates.append(h(i, control=bits[j + 1], control_value=0))
        gates.append(ry(thetas[j], bits[j + 1], control=bits[j], control_value=0))
    for i in range(bits[1] - 1, bits[0] - 1, -1):
        gates.append(h(i, control=bits[1], control_value=0))
    gates.append(ry(thetas[0], bits[1]))
    gates.extend(h(i) for i in range(bits[0]))
    gates.extend(x(bits[j]) for j in range(1, k + 1))
    return tuple(gates)


def build_partial_sum_circuit(m: int, n: int) -> Circuit:
    """Circuit whose unitary has first row (1/sqrt(m)) [1]*m + [0]*(2**n - m)."""
    decomp = decompose(m, n)
    if decomp.k == 0:
        # m == 2**r: plain Hadamards on the r lowest qubits.
        return Circuit(n, tuple(h(i) for i in range(decomp.set_bits[0])))
    thetas = [2.0 * math.acos(math.sqrt(decomp.prefix_sums[0] / m))]
    for j in range(1, decomp.k):
        thetas.append(
            2.0 * math.acos(math.sqrt(2 ** decomp.set_bits[j] / (m - decomp.prefix_sums[j - 1])))
        )
    return Circuit(n, _cascade(decomp, thetas))


def build_weighted_circuit(m: int, n: int, weights: WeightSpec) -> Circuit:
    """Same gate skeleton as the partial-sum circuit with free rotation angles.

    The first row of the resulting unitary carries the per-segment
    coefficients of ``oracle.segment_weights`` instead of a constant.
    """
    decomp = weighted_decomposition(m, n, weights)
    thetas = [2.0 * math.acos(v) for v in weights.b]
    return Circuit(n, _cascade(decomp, thetas))


def expected_gate_count(m: int, n: int) -> int:
    """Exact gate budget: r when m == 2**r, else high_bit + 2*(popcount-1)."""
    decomp = decompose(m, n)
    if decomp.k == 0:
        return decomp.set_bits[0]
    return decomp.high_bit + 2 * decomp.k
