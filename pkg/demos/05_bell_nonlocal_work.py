"""
Bell-diagonal states: local, daemonic, total and measured work
==============================================================

Along c = (1/2, -1/2, sin theta) the marginals stay maximally mixed, so
no local work exists.  Correlations still help: the daemonic value is
|sin theta|/2, the joint ergotropy max(1/2, |sin theta|)/2, and a full
projective measurement of both qubits always yields 1/2.
"""

import math

from ergolab import (
    bell_diagonal,
    classical_total_work,
    daemonic_ergotropy,
    local_work,
    nonlocal_work,
    quantum_correlation,
    qubit_hamiltonian,
    total_ergotropy,
)
from ergolab.measurement import computational_projectors

h = qubit_hamiltonian()
proj = computational_projectors()

print("theta   W_loc  W_daem  W_tot  W_meas  W_nonloc  C")
for k in range(0, 13):
    th = k * math.pi / 12
    c = (0.5, -0.5, math.sin(th))
    rho = bell_diagonal(c)
    print(f"{th:5.3f}  {local_work(rho, h):6.3f} {daemonic_ergotropy(rho, h, proj).work:6.3f}"
          f" {total_ergotropy(rho, h).work:6.3f} {classical_total_work(rho, h):6.3f}"
          f"  {nonlocal_work(rho, h):6.3f}   {quantum_correlation(c):.5f}")

# correlation and non-local work do not move together
a, b = (0.5, -0.5, 0.0), (0.0, 0.0, 0.9)
for c in (a, b):
    print(c, "C =", round(quantum_correlation(c), 4), "W_nonloc =", round(nonlocal_work(bell_diagonal(c), h), 4))
