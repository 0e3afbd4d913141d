"""Tour of the ideal gate set and the controlled-NOT construction.

The controlled-NOT is built from pi/2 rotations of spin 2 sandwiched
around an Ising phase evolution: Y2b I Y2.  On idealized hardware the
construction is exact, five CNOTs reduce to one, and the singlet-input
test returns a definite answer.
"""
import numpy as np

from nmrqc import (build_cnot, build_qa, compose, ideal_gate, prepare_input,
                   program_unitary, qubit_values, run_program)

np.set_printoptions(precision=3, suppress=True, linewidth=100)

print("pi/2 rotation of spin 1 about x (4x4, block diagonal in spin 2):")
print(ideal_gate("X1").matrix)

print("\nY2b I Y2 composes to the controlled-NOT (times a global phase):")
print(compose(["Y2b", "I", "Y2"]))

print("\ntruth table of the composed gate:")
for bits in ("00", "10", "01", "11"):
    state = prepare_input(bits)
    out = np.abs(ideal_gate("CNOT").matrix @ state.amplitudes) ** 2
    result = "".join(str(b) for b in
                     [int(out[1] + out[3] > 0.5), int(out[2] + out[3] > 0.5)])
    print(f"  |{bits}> -> |{result}>")

print("\nthe three hardware decompositions agree on idealized hardware:")
for variant in (1, 2, 3):
    u = program_unitary(build_cnot(variant, "ideal"))
    dev = np.max(np.abs(np.abs(u) - np.abs(ideal_gate("CNOT").matrix)))
    print(f"  CNOT{variant}: max |element| deviation from exact gate {dev:.2e}")

print("\nfive CNOTs on the singlet, then a pi/2 readout rotation of spin 1:")
out = run_program(build_qa("QA2", "singlet", style="ideal"))
a, b = qubit_values(out)
print(f"  qubit expectations (a, b) = ({a:.4f}, {b:.4f})  [ideal answer (1, 1)]")
