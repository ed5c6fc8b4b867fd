"""Gate set, multiplication sides, and the entangled benchmark state.

Shows why the entry-multiplication side matters, reproduces the worked
gate actions, runs the unitarity audit (the Hadamard-like gate fails it
as printed), and collapses the benchmark state to the standard Bell pair
via the j = k = -i substitution.
"""

from hqec import quaternion as quat
from hqec.linalg import MulSide, QMatrix, QVector, is_unitary, matvec, phase_alignment_check
from hqec.register import (
    QRegister,
    apply_gate,
    bell_prepare,
    cnot_gate,
    hadamard_gate,
    pauli_gate,
    phased_pauli_gate,
    substitute_units,
    t_gate,
)

print("== the side of multiplication matters ==")
m = QMatrix([[quat.K]])
v = QVector([quat.I])
print("entry k, amplitude i:")
print("  LEFT  (k*i):", matvec(m, v, MulSide.LEFT)[0])
print("  RIGHT (i*k):", matvec(m, v, MulSide.RIGHT)[0])

print()
print("== unitarity audit of the gate library ==")
for gate in (hadamard_gate(), cnot_gate(), t_gate(), pauli_gate("X"),
             phased_pauli_gate("X"), phased_pauli_gate("Y"), phased_pauli_gate("Z")):
    report = is_unitary(gate.matrix)
    aligned = phase_alignment_check(gate.matrix)
    print(f"  {gate.name:>4}: unitary={'PASS' if report.passed else 'FAIL'} "
          f"(max dev {report.max_deviation:.3g})  commutes-with-i={aligned}  "
          f"side={gate.side.value}")
print("the Hadamard-like matrix fails U U+ = I as printed; the library keeps")
print("it verbatim and reports the deviation instead of fixing it silently")

print()
print("== worked CNOT action ==")
import numpy as np

arr = np.zeros((4, 4))
arr[0] = (0.6, 0.3, 0, 0)   # (a+bi)|00>
arr[2] = (0.5, 0, 0.55, 0)  # (c+dj)|10>
arr /= np.sqrt(np.sum(arr * arr))
reg = QRegister.from_components(2, arr)
out = apply_gate(reg, cnot_gate(), [1, 2])
print("input: ", reg.render(digits=4))
print("output:", out.render(digits=4))
print("the |11> amplitude is (c+dj)*k = d*i + c*k")

print()
print("== benchmark state ==")
bell = bell_prepare()
print("H then CNOT on |00>:", bell.render(digits=6))

standard = substitute_units(cnot_gate(), {"j": -quat.I, "k": -quat.I})
reg = apply_gate(QRegister.computational(2, "00"), hadamard_gate(), [1])
reg = apply_gate(reg, standard, [1, 2])
print("same circuit with j = k = -i:", reg.render(digits=6))
