"""Dense state-vector storage and primitive gate kernels.

Bit order: qubit 0 is the MOST significant bit of a basis index, so the
n-qubit basis state |b1 b2 ... bn> sits at index sum(b_j * 2**(n-j)).
Reshaping the amplitude array to shape (2,)*n then puts qubit j on axis j,
and every kernel below works on numpy views obtained by fixing the target
and control axes: one pass over the affected amplitude pairs, never an
explicit 2^n x 2^n matrix.

Phase angles are expressed in *turns* (multiples of 2*pi).  The circuit
builders keep them as exact ``fractions.Fraction`` values with power-of-two
denominators; conversion to a complex exponential happens once, here, at
application time.

Controls are ``(qubit, polarity)`` pairs with polarity 1 ("active on |1>")
or 0 ("active on |0>").  Amplitudes whose control bits do not match are
never touched, so disabled gates leave them bitwise unchanged.

All kernels mutate the state in place and return it.  Distinct states may
be driven from distinct threads concurrently; nothing here is global.
"""

from __future__ import annotations

import cmath
import math
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateQubit, IndexOutOfRange, NotBasisState

Controls = Sequence[tuple[int, int]]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


class StateVector:
    """2^n complex amplitudes over ``num_qubits`` qubits, unit norm."""

    __slots__ = ("num_qubits", "amplitudes")

    def __init__(self, num_qubits: int, amplitudes: Iterable[complex]):
        if num_qubits < 1:
            raise ValueError(f"need at least one qubit, got {num_qubits}")
        amps = np.array(amplitudes, dtype=np.complex128)
        if amps.shape != (1 << num_qubits,):
            raise ValueError(
                f"expected {1 << num_qubits} amplitudes for {num_qubits} qubits, "
                f"got shape {amps.shape}"
            )
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        total = float(np.sum(np.abs(amps) ** 2))
        if abs(total - 1.0) > 1e-9:
            raise ValueError(f"state must be normalized: sum |amp|^2 = {total!r}")
        self.num_qubits = num_qubits
        self.amplitudes = amps

    def copy(self) -> "StateVector":
        return StateVector(self.num_qubits, self.amplitudes)

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"StateVector(num_qubits={self.num_qubits})"


def new_basis_state(num_qubits: int, index: int) -> StateVector:
    """Computational-basis state |index> on ``num_qubits`` qubits."""
    if num_qubits < 1:
        raise ValueError(f"need at least one qubit, got {num_qubits}")
    if not 0 <= index < (1 << num_qubits):
        raise IndexOutOfRange(
            f"basis index {index} out of range for {num_qubits} qubits"
        )
    amps = np.zeros(1 << num_qubits, dtype=np.complex128)
    amps[index] = 1.0
    return StateVector(num_qubits, amps)


def norm(state: StateVector) -> float:
    """Euclidean norm of the amplitude vector."""
    return float(np.linalg.norm(state.amplitudes))


def amplitude(state: StateVector, index: int) -> complex:
    """Amplitude at one basis index."""
    if not 0 <= index < state.amplitudes.size:
        raise IndexOutOfRange(
            f"basis index {index} out of range for {state.num_qubits} qubits"
        )
    return complex(state.amplitudes[index])


def extract_basis_index(state: StateVector, tol: float = 1e-9) -> int:
    """Index of the single dominant basis amplitude.

    Succeeds iff one amplitude carries probability >= 1 - tol; anything
    else means the circuit left a genuine superposition (or has a bug).
    """
    if not 0.0 < tol < 0.5:
        raise ValueError(f"tol must lie in (0, 0.5), got {tol}")
    probs = np.abs(state.amplitudes) ** 2
    best = int(np.argmax(probs))
    if probs[best] < 1.0 - tol:
        raise NotBasisState(
            f"no dominant basis amplitude: max |amp|^2 = {probs[best]:.6f} "
            f"at index {best} (threshold {1.0 - tol})"
        )
    return best


def _validate_qubits(num_qubits: int, targets: Sequence[int], controls: Controls) -> None:
    seen: set[int] = set()
    for q in (*targets, *(q for q, _ in controls)):
        if not 0 <= q < num_qubits:
            raise IndexOutOfRange(f"qubit {q} out of range for {num_qubits} qubits")
        if q in seen:
            raise DuplicateQubit(f"qubit {q} used more than once in one gate")
        seen.add(q)
    for _, pol in controls:
        if pol not in (0, 1):
            raise ValueError(f"control polarity must be 0 or 1, got {pol!r}")


def _fixed_axes(num_qubits: int, fixed: Iterable[tuple[int, int]]):
    idx: list[object] = [slice(None)] * num_qubits
    for q, bit in fixed:
        idx[q] = bit
    return tuple(idx)


def apply_phase(
    state: StateVector, target: int, phase_turns, controls: Controls = ()
) -> StateVector:
    """Multiply the target's |1> component by exp(2*pi*i*phase_turns)."""
    n = state.num_qubits
    _validate_qubits(n, (target,), controls)
    turns = float(phase_turns)
    if not math.isfinite(turns):
        raise ValueError(f"phase must be finite, got {phase_turns!r}")
    if phase_turns == 0:
        return state  # exact identity, amplitudes untouched
    factor = cmath.exp(2j * math.pi * turns)
    psi = state.amplitudes.reshape((2,) * n)
    psi[_fixed_axes(n, [(target, 1), *controls])] *= factor
    return state


def apply_hadamard(state: StateVector, target: int, controls: Controls = ()) -> StateVector:
    """Standard 2x2 Hadamard on the target, subject to controls."""
    n = state.num_qubits
    _validate_qubits(n, (target,), controls)
    psi = state.amplitudes.reshape((2,) * n)
    i0 = _fixed_axes(n, [(target, 0), *controls])
    i1 = _fixed_axes(n, [(target, 1), *controls])
    a, b = psi[i0], psi[i1]
    s = (a + b) * _INV_SQRT2
    d = (a - b) * _INV_SQRT2
    psi[i0] = s
    psi[i1] = d
    return state


def apply_x(state: StateVector, target: int, controls: Controls = ()) -> StateVector:
    """NOT on the target: swaps amplitude pairs differing in the target bit."""
    n = state.num_qubits
    _validate_qubits(n, (target,), controls)
    psi = state.amplitudes.reshape((2,) * n)
    i0 = _fixed_axes(n, [(target, 0), *controls])
    i1 = _fixed_axes(n, [(target, 1), *controls])
    tmp = psi[i0].copy()
    psi[i0] = psi[i1]
    psi[i1] = tmp
    return state


def apply_swap(
    state: StateVector, target_a: int, target_b: int, controls: Controls = ()
) -> StateVector:
    """Exchange two qubits: swaps amplitudes of the 01 and 10 target patterns."""
    n = state.num_qubits
    _validate_qubits(n, (target_a, target_b), controls)
    psi = state.amplitudes.reshape((2,) * n)
    i01 = _fixed_axes(n, [(target_a, 0), (target_b, 1), *controls])
    i10 = _fixed_axes(n, [(target_a, 1), (target_b, 0), *controls])
    tmp = psi[i01].copy()
    psi[i01] = psi[i10]
    psi[i10] = tmp
    return state
