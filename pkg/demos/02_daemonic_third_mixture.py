"""
Measuring an ancilla before extracting work
===========================================

Start from (|11><11| + |10><10| + |01><01|)/3.  Reading the ancilla in
the computational basis splits the system into a pure branch and a
maximally mixed one.
"""

from ergolab import daemonic_ergotropy, project_ancilla, qubit_hamiltonian, third_mixture
from ergolab.measurement import computational_projectors

h = qubit_hamiltonian()
rho = third_mixture()
proj = computational_projectors()

for br in project_ancilla(rho, proj):
    print(f"ancilla {br.label}: p = {br.probability:.4f}, purity {br.conditional_state.purity():.3f}")

rep = daemonic_ergotropy(rho, h, proj)
print(f"daemonic work {rep.work:.6f}  (plain ergotropy {rep.baseline_ergotropy:.6f})")
for b, w in zip(rep.branches, rep.weights):
    print(f"  branch {b.label}: weight {w:.4f}, energy after its unitary {b.final_energy:.4f}")
