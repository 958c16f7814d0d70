"""Command-line front end: run add / dec / mul on the simulator and verify
every result against plain classical arithmetic.

Exit codes: 0 result verified, 1 simulator/oracle mismatch, 2 usage error
(bad operands, qubit budget exceeded, unknown flags).

The ``--json`` flag prints the run report as a single JSON object::

    {"operation": str, "inputs": {str: int}, "widths": {str: int},
     "outputs": {str: int}, "gate_count": int, "wall_time": float,
     "verified": bool}

``--emit-circuit PATH`` writes the executed circuit in the text listing
format documented in :mod:`qftarith.circuit`.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass

from .arith import build_adder, build_decrement
from .circuit import (
    Circuit,
    RegisterLayout,
    circuit_listing,
    decode_registers,
    encode_registers,
    run,
)
from .errors import OperandTooWide, QubitBudgetExceeded
from .multiplier import MultiplierSpec, build_multiplier, multiplier_layout
from .qstate import extract_basis_index, new_basis_state

MAX_QUBITS = 24


@dataclass
class RunReport:
    """Everything one command produced, including the oracle comparison."""

    operation: str
    inputs: dict[str, int]
    widths: dict[str, int]
    outputs: dict[str, int]
    gate_count: int
    wall_time: float
    verified: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


def oracle(operation: str, operands: tuple[int, ...], n: int) -> int:
    """Classical ground truth: modular add/dec, exact multiply."""
    if operation == "add":
        a, b = operands
        return (a + b) % (1 << n)
    if operation == "dec":
        (v,) = operands
        return (v - 1) % (1 << n)
    if operation == "mul":
        x, y = operands
        return x * y
    raise ValueError(f"unknown operation {operation!r}")


def _check_operands(n: int, **operands: int) -> None:
    for name, value in operands.items():
        if not 0 <= value < (1 << n):
            raise OperandTooWide(
                f"operand {name}={value} does not fit in {n} bits (max {(1 << n) - 1})"
            )


def _check_budget(total_qubits: int) -> None:
    if total_qubits > MAX_QUBITS:
        raise QubitBudgetExceeded(
            f"{total_qubits} qubits would need 2^{total_qubits} = "
            f"{1 << total_qubits:,} complex amplitudes "
            f"(~{(16 << total_qubits) / 2**20:,.0f} MiB); the budget is {MAX_QUBITS} qubits"
        )


def _simulate(circuit: Circuit, layout: RegisterLayout, inputs: dict[str, int]):
    state = new_basis_state(layout.num_qubits, encode_registers(layout, inputs))
    run(circuit, state)
    return decode_registers(layout, extract_basis_index(state, tol=1e-9))


def _run_add(args) -> tuple[RunReport, Circuit]:
    n = args.n
    _check_operands(n, a=args.a, b=args.b)
    _check_budget(2 * n)
    start = time.perf_counter()
    layout = RegisterLayout([("a", n), ("b", n)])
    circuit = build_adder(layout)
    outputs = _simulate(circuit, layout, {"a": args.a, "b": args.b})
    elapsed = time.perf_counter() - start
    report = RunReport(
        operation="add",
        inputs={"a": args.a, "b": args.b},
        widths=layout.widths(),
        outputs=outputs,
        gate_count=len(circuit),
        wall_time=elapsed,
        verified=outputs["b"] == oracle("add", (args.a, args.b), n),
    )
    return report, circuit


def _run_dec(args) -> tuple[RunReport, Circuit]:
    n = args.n
    _check_operands(n, v=args.v)
    _check_budget(n)
    start = time.perf_counter()
    layout = RegisterLayout([("v", n)])
    circuit = build_decrement(layout, "v")
    outputs = _simulate(circuit, layout, {"v": args.v})
    elapsed = time.perf_counter() - start
    report = RunReport(
        operation="dec",
        inputs={"v": args.v},
        widths=layout.widths(),
        outputs=outputs,
        gate_count=len(circuit),
        wall_time=elapsed,
        verified=outputs["v"] == oracle("dec", (args.v,), n),
    )
    return report, circuit


def _run_mul(args) -> tuple[RunReport, Circuit]:
    n = args.n
    _check_operands(n, x=args.x, y=args.y)
    m = args.acc_width if args.acc_width is not None else 2 * n
    iterations = args.iterations if args.iterations is not None else (1 << n) - 1
    spec = MultiplierSpec(n=n, m=m, iterations=iterations)
    layout = multiplier_layout(spec)
    _check_budget(layout.num_qubits)
    start = time.perf_counter()
    circuit = build_multiplier(spec)
    outputs = _simulate(circuit, layout, {"x": args.x, "y": args.y})
    elapsed = time.perf_counter() - start
    report = RunReport(
        operation="mul",
        inputs={"x": args.x, "y": args.y, "iterations": iterations},
        widths=layout.widths(),
        outputs=outputs,
        gate_count=len(circuit),
        wall_time=elapsed,
        verified=outputs["accumulator"] == oracle("mul", (args.x, args.y), n),
    )
    return report, circuit


def _format_report(report: RunReport) -> str:
    def pairs(d: dict[str, int]) -> str:
        return ", ".join(f"{k}={v}" for k, v in d.items())

    total = sum(report.widths.values())
    return "\n".join([
        f"operation : {report.operation}",
        f"inputs    : {pairs(report.inputs)}",
        f"widths    : {pairs(report.widths)}  ({total} qubits)",
        f"outputs   : {pairs(report.outputs)}",
        f"gates     : {report.gate_count}",
        f"wall time : {report.wall_time * 1e3:.2f} ms",
        f"verified  : {'yes' if report.verified else 'no'}",
    ])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qftarith",
        description="Simulate Fourier-transform arithmetic circuits and "
                    "verify the results against classical arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, required=True, metavar="WIDTH",
                       help="register width in qubits")
        p.add_argument("--emit-circuit", metavar="PATH",
                       help="write the executed circuit listing to PATH")
        p.add_argument("--json", action="store_true",
                       help="print the run report as JSON")

    p_add = sub.add_parser("add", help="in-place addition (a + b) mod 2^n")
    p_add.add_argument("a", type=int)
    p_add.add_argument("b", type=int)
    common(p_add)

    p_dec = sub.add_parser("dec", help="decrement (v - 1) mod 2^n")
    p_dec.add_argument("v", type=int)
    common(p_dec)

    p_mul = sub.add_parser("mul", help="multiplication x * y (exact)")
    p_mul.add_argument("x", type=int)
    p_mul.add_argument("y", type=int)
    common(p_mul)
    p_mul.add_argument("--acc-width", type=int, metavar="M",
                       help="accumulator width (default 2n)")
    p_mul.add_argument("--iterations", type=int, metavar="K",
                       help="unroll count (default 2^n - 1); fewer iterations "
                            "truncate the product to x * min(y, K)")

    return parser


_RUNNERS = {"add": _run_add, "dec": _run_dec, "mul": _run_mul}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, circuit = _RUNNERS[args.command](args)
    except (OperandTooWide, QubitBudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.emit_circuit:
        with open(args.emit_circuit, "w", encoding="utf-8") as fh:
            fh.write(circuit_listing(circuit) + "\n")
    print(report.to_json() if args.json else _format_report(report))
    return 0 if report.verified else 1


def console_main() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
