"""
Weak measurement: averaging versus post-selecting
=================================================

Averaged over both outcomes a weak measurement gives back the projective
value for every strength x.  Keeping only the favourable outcome beats
it, reaching twice the projective value as x grows for the one-third
mixture.
"""

import math

from ergolab import (
    WeakMeasurement,
    daemonic_ergotropy,
    nonselective_weak_work,
    qubit_hamiltonian,
    super_ergotropy,
    third_mixture,
)
from ergolab.measurement import computational_projectors
from ergolab.scenarios import run_fig1, to_csv

h = qubit_hamiltonian()
rho = third_mixture()
proj = computational_projectors()
w_d = daemonic_ergotropy(rho, h, proj).work

print(" x     averaged   selected   sign  ratio   (3+tanh x)/(3-tanh x)")
for x in (0.0, 0.25, 0.5, 1.0, 2.0, 5.0):
    w = WeakMeasurement(x, proj)
    avg = nonselective_weak_work(rho, h, w).work
    sup = super_ergotropy(rho, h, w)
    t = math.tanh(x)
    print(f"{x:4.2f}  {avg:.6f}   {sup.work:.6f}   {sup.sign}     {sup.work / w_d:.4f}  {(3 + t) / (3 - t):.4f}")

# the same curve as CSV
print(to_csv(*run_fig1([0.0, 1.0, 3.0, 50.0])))
