"""
Daemonic ergotropy from Bloch vectors
=====================================

For a computational-basis ancilla measurement the daemonic ergotropy of
a two-qubit state depends only on the system Bloch vector s and the
third column t3 of the correlation matrix:

    (2 s3 + |s + t3| + |s - t3|) / 4   (in units of the level gap)

and since |s + t3| + |s - t3| >= 2|s| it never falls below the local
ergotropy (s3 + |s|) / 2.
"""

import numpy as np

from ergolab import daemonic_ergotropy, daemonic_geometric, local_work, qubit_hamiltonian, random_density, to_bloch
from ergolab.measurement import computational_projectors

h = qubit_hamiltonian()
proj = computational_projectors()

worst = 0.0
for seed in range(200):
    rho = random_density(4, seed)
    b = to_bloch(rho)
    pipeline = daemonic_ergotropy(rho, h, proj).work
    worst = max(worst, abs(pipeline - daemonic_geometric(b, h.gap)))
    assert pipeline >= local_work(rho, h) - 1e-12

print(f"largest pipeline/closed-form gap over 200 states: {worst:.2e}")

b = to_bloch(random_density(4, 3))
print("s  =", np.round(b.s, 4))
print("t3 =", np.round(b.t[:, 2], 4))
