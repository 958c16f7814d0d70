"""Repeated-addition multiplier over a Fourier-space accumulator.

Register layout: ``accumulator[m] | x[n] | y[n] | control[1]``.  The
accumulator is transformed once up front and back once at the end; in
between, each unrolled iteration adds x into the accumulator's phases and
counts the y register down by one.  Because a circuit cannot branch on
data, the loop is unrolled 2**n - 1 times (the largest possible y).

Control flow.  The y register runs as a *free-running* modular counter:
every iteration decrements it unconditionally.  A zero check (an X on the
stop qubit controlled on every y qubit being |0>) runs before the first
addition and after every decrement.  Over iterations+1 checkpoints the
counter passes through zero exactly once, so the toggle fires exactly once
and the stop qubit acts as a one-way latch: |0> ("keep adding") until the
countdown completes, |1> ("stopped") afterwards.  Each addition kick is
doubly controlled - by one x qubit and by the stop qubit still being |0> -
so exactly y copies of x land in the accumulator.  A final decrement
completes the counter's full modular cycle (2**n decrements in total at
the standard unroll count), returning y to its initial value.

The end state is ``|x*y>|x>|y>|1>``: product in the accumulator, both
inputs preserved, stop qubit set, for every input.  A variant that
instead zeroed the y register for all inputs would have to merge distinct
inputs into one final state (consider x = 0 with different y), which no
unitary can do; keeping the counter's value is what keeps the construction
reversible.  With fewer than 2**n - 1 iterations the accumulator holds
x * min(y, iterations): the unroll bound is tight.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .arith import build_decrement, build_fourier_add_register
from .circuit import (
    Circuit,
    Gate,
    RegisterLayout,
    concat,
    decode_register,
    encode_registers,
    run,
)
from .errors import SpecInvariantViolation
from .qft import build_inverse_qft, build_qft
from .qstate import extract_basis_index, new_basis_state


@dataclass(frozen=True)
class MultiplierSpec:
    """Widths and unroll count for one multiplier circuit.

    ``m >= 2n`` guarantees the product fits.  ``iterations`` defaults to
    2**n - 1, the worst-case multiplier value; smaller counts build a
    deliberately truncated circuit (the result becomes x * min(y, iters)),
    which is how the tightness of the bound is demonstrated.
    """

    n: int
    m: int
    iterations: int

    def __post_init__(self):
        if self.n < 1:
            raise SpecInvariantViolation(f"need n >= 1, got {self.n}")
        if self.m < 2 * self.n:
            raise SpecInvariantViolation(
                f"accumulator width {self.m} cannot hold every {self.n}-bit product; "
                f"need at least {2 * self.n}"
            )
        if self.iterations < 0:
            raise SpecInvariantViolation(f"iterations must be >= 0, got {self.iterations}")

    @classmethod
    def for_width(cls, n: int) -> "MultiplierSpec":
        return cls(n=n, m=2 * n, iterations=(1 << n) - 1)


def multiplier_layout(spec: MultiplierSpec) -> RegisterLayout:
    return RegisterLayout(
        [("accumulator", spec.m), ("x", spec.n), ("y", spec.n), ("control", 1)]
    )


def build_zero_check(
    y_qubits: Sequence[int] | range,
    control_qubit: int,
    num_qubits: int | None = None,
    label: str | None = None,
) -> Circuit:
    """X on the stop qubit, active exactly when every y qubit is |0>.

    Toggle semantics: applying it twice with y still zero flips the stop
    qubit back (X is an involution).
    """
    qs = list(y_qubits)
    n = (max([*qs, control_qubit]) + 1) if num_qubits is None else num_qubits
    gate = Gate.x(control_qubit, controls=tuple((q, 0) for q in qs), label=label)
    return Circuit(n, (gate,))


def build_multiplier(spec: MultiplierSpec) -> Circuit:
    """Full multiplication network |0>|x>|y>|0> -> |x*y>|x>|y>|1>."""
    layout = multiplier_layout(spec)
    n = layout.num_qubits
    acc, x, y = layout["accumulator"], layout["x"], layout["y"]
    stop = layout["control"][0]

    parts = [
        build_qft(acc, n, label="qft[accumulator]"),
        build_zero_check(y, stop, n, label="check[0]"),
    ]
    for i in range(1, spec.iterations + 1):
        parts.append(
            build_fourier_add_register(
                x, acc, controls=((stop, 0),), num_qubits=n, label=f"add[iter {i}]"
            )
        )
        parts.append(build_decrement(layout, "y", label=f"dec[iter {i}]"))
        parts.append(build_zero_check(y, stop, n, label=f"check[{i}]"))
    parts.append(build_decrement(layout, "y", label="dec[restore]"))
    parts.append(build_inverse_qft(acc, n, label="iqft[accumulator]"))
    return concat(parts)


def multiply(x: int, y: int, n: int) -> int:
    """Multiply two n-bit integers on the simulator; returns x*y exactly.

    Builds the standard circuit (accumulator width 2n, 2**n - 1 iterations),
    runs it on the encoded input, extracts the final basis state, and
    decodes the accumulator.  Raises NotBasisState if the circuit ever
    fails to produce a deterministic output (which would be a bug).
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if not 0 <= x < (1 << n) or not 0 <= y < (1 << n):
        raise ValueError(f"operands must fit in {n} bits, got x={x}, y={y}")
    spec = MultiplierSpec.for_width(n)
    layout = multiplier_layout(spec)
    circuit = build_multiplier(spec)
    state = new_basis_state(layout.num_qubits, encode_registers(layout, {"x": x, "y": y}))
    run(circuit, state)
    final = extract_basis_index(state, tol=1e-9)
    return decode_register(layout, "accumulator", final)
