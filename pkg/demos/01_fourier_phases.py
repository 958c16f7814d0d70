"""Walk through the Fourier encoding of a small integer.

Encoding 3 on two qubits and applying the transform leaves each wire in
(|0> + e^{2 pi i f}|1>)/sqrt(2), where f is a binary fraction built from
the value's bits: the top wire carries 1/2 + 1/4 of a turn, the bottom
wire 1/2.  The inverse transform brings the integer right back.
"""

import numpy as np

from qftarith import build_inverse_qft, build_qft, extract_basis_index, new_basis_state, run

state = new_basis_state(2, 3)
print("start:            |11>  (the number 3)")

run(build_qft(range(2)), state)
print("after transform:  amplitudes", np.round(state.amplitudes, 6))

# read the phase carried by each wire from amplitude ratios
amps = state.amplitudes
for wire, pattern in ((0, 0b10), (1, 0b01)):
    turns = np.angle(amps[pattern] / amps[0]) / (2 * np.pi) % 1
    print(f"  wire {wire} phase: {turns:.4f} turns")

run(build_inverse_qft(range(2)), state)
print("after inverse:    back to basis state", extract_basis_index(state))
