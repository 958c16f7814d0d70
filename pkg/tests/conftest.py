"""Shared oracle helpers for the test suite.

These build gates and circuits as explicit dense matrices, index by index,
on purpose: they share nothing with the view-slicing kernels under test
except the bit-order convention (qubit 0 = most significant bit), so they
serve as an independent cross-check.
"""

import math

import numpy as np

from qftarith.circuit import Circuit, Gate, GateKind

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def bit_of(index: int, qubit: int, num_qubits: int) -> int:
    return (index >> (num_qubits - 1 - qubit)) & 1


def bit_reverse(index: int, width: int) -> int:
    return int(format(index, f"0{width}b")[::-1], 2)


def dense_gate_matrix(gate: Gate, num_qubits: int) -> np.ndarray:
    """Explicit 2^n x 2^n matrix for one gate, built by basis enumeration."""
    dim = 1 << num_qubits
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        if any(bit_of(col, q, num_qubits) != pol for q, pol in gate.controls):
            mat[col, col] = 1.0
            continue
        if gate.kind is GateKind.PHASE:
            tbit = bit_of(col, gate.targets[0], num_qubits)
            mat[col, col] = (
                np.exp(2j * np.pi * float(gate.phase_turns)) if tbit else 1.0
            )
        elif gate.kind is GateKind.X:
            flipped = col ^ (1 << (num_qubits - 1 - gate.targets[0]))
            mat[flipped, col] = 1.0
        elif gate.kind is GateKind.HADAMARD:
            mask = 1 << (num_qubits - 1 - gate.targets[0])
            tbit = bit_of(col, gate.targets[0], num_qubits)
            mat[col ^ mask, col] = _INV_SQRT2
            mat[col, col] = _INV_SQRT2 if tbit == 0 else -_INV_SQRT2
        elif gate.kind is GateKind.SWAP:
            a, b = gate.targets
            ba, bb = bit_of(col, a, num_qubits), bit_of(col, b, num_qubits)
            if ba == bb:
                mat[col, col] = 1.0
            else:
                swapped = col ^ (1 << (num_qubits - 1 - a)) ^ (1 << (num_qubits - 1 - b))
                mat[swapped, col] = 1.0
        else:  # pragma: no cover
            raise AssertionError(f"unhandled kind {gate.kind}")
    return mat


def circuit_matrix(circuit: Circuit) -> np.ndarray:
    """Dense unitary of a whole circuit (left-multiplying gate matrices)."""
    dim = 1 << circuit.num_qubits
    mat = np.eye(dim, dtype=np.complex128)
    for gate in circuit.gates:
        mat = dense_gate_matrix(gate, circuit.num_qubits) @ mat
    return mat


def dft_matrix(width: int) -> np.ndarray:
    """Unitary DFT with omega = exp(2*pi*i / 2**width)."""
    dim = 1 << width
    idx = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(idx, idx) / dim) / math.sqrt(dim)


def random_state(num_qubits: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-ish random normalized amplitude vector."""
    amps = rng.standard_normal(1 << num_qubits) + 1j * rng.standard_normal(1 << num_qubits)
    return amps / np.linalg.norm(amps)
