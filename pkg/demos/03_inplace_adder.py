"""The in-place adder: |a>|b> -> |a>|(a+b) mod 2^n>.

The sum accumulates in register b's Fourier phases, kicked by controlled
rotations read off register a's qubits; a itself never changes.  The
check below sweeps every 3-bit pair against plain integer arithmetic.
"""

from qftarith import (
    RegisterLayout,
    build_adder,
    decode_registers,
    encode_registers,
    extract_basis_index,
    new_basis_state,
    run,
    stats,
)

n = 3
layout = RegisterLayout([("a", n), ("b", n)])
adder = build_adder(layout)
print("adder over", layout.num_qubits, "qubits:", stats(adder))

print("\na few sums:")
for a, b in [(0, 5), (3, 6), (7, 7)]:
    state = new_basis_state(layout.num_qubits, encode_registers(layout, {"a": a, "b": b}))
    out = decode_registers(layout, extract_basis_index(run(adder, state)))
    print(f"  {a} + {b} = {out['b']}  (mod {1 << n}, register a still {out['a']})")

mismatches = 0
for a in range(1 << n):
    for b in range(1 << n):
        state = new_basis_state(layout.num_qubits, encode_registers(layout, {"a": a, "b": b}))
        out = decode_registers(layout, extract_basis_index(run(adder, state)))
        mismatches += out["b"] != (a + b) % (1 << n)
print(f"\nexhaustive sweep: {mismatches} mismatches out of {1 << (2 * n)} pairs")
