"""The repeated-addition multiplier, end to end.

A free-running countdown register passes through zero exactly once, a
multi-controlled NOT latches the stop qubit at that moment, and until
then each unrolled iteration adds x into the Fourier-space accumulator.
Everything stays reversible: the inputs come out unchanged next to the
product.
"""

from qftarith import (
    MultiplierSpec,
    build_multiplier,
    decode_registers,
    encode_registers,
    extract_basis_index,
    multiplier_layout,
    multiply,
    new_basis_state,
    run,
    stats,
)

spec = MultiplierSpec.for_width(2)
layout = multiplier_layout(spec)
print("registers:", layout.widths(), "->", layout.num_qubits, "qubits")
print("circuit:  ", stats(build_multiplier(spec)))

print("\n3 x 2, full register readout:")
state = new_basis_state(layout.num_qubits, encode_registers(layout, {"x": 3, "y": 2}))
run(build_multiplier(spec), state)
print(" ", decode_registers(layout, extract_basis_index(state)))

print("\nmultiplication table, 3-bit operands:")
for x in range(8):
    print("  " + " ".join(f"{multiply(x, y, 3):2d}" for y in range(8)))

print("\ntruncating the unroll shows why 2^n - 1 iterations are needed:")
for iterations in (1, 2, 3):
    sp = MultiplierSpec(n=2, m=4, iterations=iterations)
    lay = multiplier_layout(sp)
    state = new_basis_state(lay.num_qubits, encode_registers(lay, {"x": 1, "y": 3}))
    run(build_multiplier(sp), state)
    out = decode_registers(lay, extract_basis_index(state))
    print(f"  iterations={iterations}: accumulator={out['accumulator']}"
          f"  (want {1 * 3})")
