"""Total, local and non-local work of a two-qubit state, and the
Bell-diagonal correlation measure."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .daemonic import local_work
from .ergotropy import ergotropy, joint_hamiltonian, passive_energy
from .measurement import measure_total
from .states import BellDiagonalParams, as_density, to_bloch

BELL_DETECT_TOL = 1e-12


def _joint(h):
    return joint_hamiltonian(h) if h.dim == 2 else h


def _system(h):
    if h.dim != 2:
        raise ValueError("local quantities need the two-level system Hamiltonian")
    return h


def total_ergotropy(rho, h):
    """Ergotropy of the joint state under ``H_S x I``.

    ``h`` may be the system Hamiltonian (lifted automatically) or an
    explicit four-level joint Hamiltonian.
    """
    return ergotropy(rho, _joint(h))


def classical_total_work(rho, h, projectors=None):
    """Average ergotropy after a complete projective measurement of the
    joint system (computational basis by default), by enumerating the four
    branches."""
    rho = as_density(rho)
    hj = _joint(h)
    final = 0.0
    for br in measure_total(rho, projectors):
        if br.present:
            final += br.probability * passive_energy(br.conditional_state, hj)
    return hj.energy(rho) - final


def classical_nonlocal_work(rho, h, projectors=None):
    h = _system(h)
    return classical_total_work(rho, h, projectors) - local_work(rho, h)


def nonlocal_work(rho, h):
    h = _system(h)
    return total_ergotropy(rho, h).work - local_work(rho, h)


def quantum_correlation(p):
    """``sqrt(2 - sqrt(4 - (c1^2 c2^2 + c1^2 c3^2 + c2^2 c3^2)))``."""
    if not isinstance(p, BellDiagonalParams):
        p = BellDiagonalParams(p)
    c1, c2, c3 = (c * c for c in p.c)
    inner = 4.0 - (c1 * c2 + c1 * c3 + c2 * c3)
    outer = 2.0 - math.sqrt(max(inner, 0.0))
    if outer < -1e-15:
        raise ArithmeticError(f"negative radicand {outer}")
    return math.sqrt(max(outer, 0.0))


def bell_parameters(rho, tol=BELL_DETECT_TOL):
    """``BellDiagonalParams`` if ``rho`` is Bell-diagonal, else ``None``."""
    b = to_bloch(rho)
    t = np.asarray(b.t)
    off = t - np.diag(np.diag(t))
    if max(np.max(np.abs(b.s)), np.max(np.abs(b.r)), np.max(np.abs(off))) > tol:
        return None
    return BellDiagonalParams(np.clip(np.diag(t), -1.0, 1.0))


@dataclass(frozen=True)
class NonlocalReport:
    total_work: float
    classical_total_work: float
    local_work: float
    nonlocal_work: float
    classical_nonlocal_work: float
    correlation: float | None


def nonlocal_report(rho, h):
    rho = as_density(rho)
    h = _system(h)
    w_tot = total_ergotropy(rho, h).work
    w_cls = classical_total_work(rho, h)
    w_loc = local_work(rho, h)
    params = bell_parameters(rho)
    return NonlocalReport(
        total_work=w_tot,
        classical_total_work=w_cls,
        local_work=w_loc,
        nonlocal_work=w_tot - w_loc,
        classical_nonlocal_work=w_cls - w_loc,
        correlation=None if params is None else quantum_correlation(params),
    )
