"""The decrement gate, stage by stage: 3 - 1 = 2 on two qubits.

Subtraction happens entirely in phase space: transform, kick every wire
by a negative dyadic angle (-1/4 and -1/2 of a turn here), transform
back.  No borrow bits, no ancillas, and below zero it wraps to 2^n - 1.
"""

import numpy as np

from qftarith import (
    RegisterLayout,
    build_decrement,
    build_fourier_add_constant,
    build_qft,
    circuit_listing,
    extract_basis_index,
    new_basis_state,
    run,
)

layout = RegisterLayout([("v", 2)])

print("circuit listing:")
print(circuit_listing(build_decrement(layout, "v")))

state = new_basis_state(2, 3)
run(build_qft(range(2)), state)
print("\nFourier form of 3:      ", np.round(state.amplitudes, 6))

run(build_fourier_add_constant(range(2), -1), state)
print("after the -1 phase kick:", np.round(state.amplitudes, 6))

state = run(build_decrement(layout, "v"), new_basis_state(2, 3))
print("\nfull gate on |11>:  ->  |{:02b}>  (the number {})".format(
    extract_basis_index(state), extract_basis_index(state)))

# keep going: 2 -> 1 -> 0 -> wraps to 3
value = 2
for _ in range(3):
    state = run(build_decrement(layout, "v"), new_basis_state(2, value))
    nxt = extract_basis_index(state)
    print(f"decrement {value} -> {nxt}")
    value = nxt
