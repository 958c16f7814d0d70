"""Fourier-space arithmetic blocks: constant and register addition,
the decrement gate, and the standalone in-place adder.

With the register in the Fourier form of value v (wire j holding relative
phase (v / 2**(w-j)) mod 1, see :mod:`qftarith.qft`), adding a constant c
is one phase kick of c / 2**(w-j) turns per wire: no carries, the mod-1
phase arithmetic wraps exactly like mod-2**w integer arithmetic.  Adding
a register works the same way bit by bit, with each kick controlled by
the source qubit that owns that bit.  All emitted angles are exact dyadic
fractions with denominator at most 2**(destination width).

All arithmetic is modulo 2**width: wraparound is forced by unitarity, so
subtracting below zero lands on 2**w - 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .circuit import Circuit, Gate, RegisterLayout, concat, labeled
from .errors import ConstantTooWide, OverlappingRegisters
from .qft import build_inverse_qft, build_qft

Controls = Sequence[tuple[int, int]]


@dataclass(frozen=True)
class SignedConstant:
    """A non-negative magnitude with an explicit sign."""

    magnitude: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.magnitude < 0:
            raise ValueError(f"magnitude must be >= 0, got {self.magnitude}")

    @classmethod
    def from_int(cls, value: int | "SignedConstant") -> "SignedConstant":
        if isinstance(value, SignedConstant):
            return value
        return cls(abs(value), -1 if value < 0 else 1)


def _check_disjoint(*groups: Sequence[int]) -> None:
    seen: set[int] = set()
    for group in groups:
        for q in group:
            if q in seen:
                raise OverlappingRegisters(f"qubit {q} appears in more than one register")
            seen.add(q)


def build_fourier_add_constant(
    qubits: Sequence[int] | range,
    constant: int | SignedConstant,
    controls: Controls = (),
    num_qubits: int | None = None,
    label: str | None = None,
) -> Circuit:
    """Phase layer adding a signed constant to a register held in Fourier form.

    At most one single-qubit phase gate per wire; a zero constant emits an
    empty circuit.  Controls gate every kick, so an unsatisfied pattern
    leaves the register's Fourier phases untouched.
    """
    c = SignedConstant.from_int(constant)
    qs = list(qubits)
    w = len(qs)
    if not qs:
        raise ValueError("register must be non-empty")
    if c.magnitude >= (1 << w):
        raise ConstantTooWide(
            f"constant {c.sign * c.magnitude} does not fit in width {w}"
        )
    _check_disjoint(qs, [q for q, _ in controls])
    n = (max([*qs, *(q for q, _ in controls)]) + 1) if num_qubits is None else num_qubits
    gates: list[Gate] = []
    for j in range(w):
        turns = Fraction(c.magnitude, 1 << (w - j)) % 1
        if turns == 0:
            continue
        gates.append(Gate.phase(c.sign * turns, qs[j], controls=tuple(controls), label=label))
    return Circuit(n, tuple(gates))


def build_fourier_add_register(
    src: Sequence[int] | range,
    dst: Sequence[int] | range,
    controls: Controls = (),
    num_qubits: int | None = None,
    label: str | None = None,
) -> Circuit:
    """Controlled-phase network adding a basis-encoded register into a
    Fourier-form destination.

    The destination must be at least as wide as the source; the source is
    treated as zero-extended.  Each source bit of weight 2**p kicks
    destination wire j by 2**p / 2**(m-j) turns, controlled by that source
    qubit (plus any extra controls).  The source register is left unchanged.
    """
    src_qs, dst_qs = list(src), list(dst)
    ws, wd = len(src_qs), len(dst_qs)
    if not src_qs or not dst_qs:
        raise ValueError("registers must be non-empty")
    if wd < ws:
        raise ValueError(f"destination width {wd} is narrower than source width {ws}")
    _check_disjoint(src_qs, dst_qs, [q for q, _ in controls])
    all_qs = [*src_qs, *dst_qs, *(q for q, _ in controls)]
    n = (max(all_qs) + 1) if num_qubits is None else num_qubits
    gates: list[Gate] = []
    for s in range(ws):
        weight = 1 << (ws - 1 - s)
        for j in range(wd):
            turns = Fraction(weight, 1 << (wd - j)) % 1
            if turns == 0:
                continue
            gates.append(
                Gate.phase(turns, dst_qs[j],
                           controls=((src_qs[s], 1), *controls), label=label)
            )
    return Circuit(n, tuple(gates))


def build_decrement(
    layout: RegisterLayout,
    register: str,
    controls: Controls = (),
    label: str | None = None,
) -> Circuit:
    """Decrement gate: |v> -> |v-1 mod 2**w> on the named register.

    Structure: Fourier transform, one negative phase kick per wire
    (-1/2**(w-j) turns), inverse transform.  Only the middle phase layer
    carries the controls: when they are unsatisfied the transform and its
    inverse cancel, so the gate acts as the identity.
    """
    qs = layout[register]
    n = layout.num_qubits
    circuit = concat([
        build_qft(qs, n),
        build_fourier_add_constant(qs, -1, controls, n),
        build_inverse_qft(qs, n),
    ])
    return labeled(circuit, label)


def build_adder(layout: RegisterLayout, label: str | None = None) -> Circuit:
    """In-place adder |a>|b> -> |a>|(a+b) mod 2**n>, registers 'a' and 'b'.

    The sum builds up in register b's Fourier phases; register a is read
    by controls only and comes out unchanged.  No carry ancillas.
    """
    a, b = layout["a"], layout["b"]
    if len(a) != len(b):
        raise ValueError(f"register widths differ: a={len(a)}, b={len(b)}")
    n = layout.num_qubits
    circuit = concat([
        build_qft(b, n),
        build_fourier_add_register(a, b, num_qubits=n),
        build_inverse_qft(b, n),
    ])
    return labeled(circuit, label)
