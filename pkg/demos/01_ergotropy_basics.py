"""
Ergotropy of a single qubit
===========================

How much energy can a unitary pull out of a qubit state?
"""

import numpy as np

from ergolab import ergotropy, qubit_hamiltonian
from ergolab.linalg import KET0, KET1, projector

h = qubit_hamiltonian(0.0, 1.0)

# basis order is (|1>, |0>): the excited level comes first
excited, ground = projector(KET1), projector(KET0)

for label, rho in [("ground", ground), ("excited", excited),
                   ("0.7 excited", 0.7 * excited + 0.3 * ground),
                   ("0.3 excited", 0.3 * excited + 0.7 * ground)]:
    res = ergotropy(rho, h)
    print(f"{label:12s} energy {res.initial_energy:.3f}  work {res.work:.3f}")

# the ergotropic unitary sends the populated level down
res = ergotropy(0.7 * excited + 0.3 * ground, h)
print("unitary:\n", np.round(res.unitary, 6))
print("passive state:\n", np.round(res.passive_state.matrix.real, 6))
