"""Passive energy, ergotropy and the ergotropic unitary."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, ErgolabError
from .states import DensityMatrix, as_density


@dataclass(frozen=True, eq=False)
class Hamiltonian:
    """Energy levels ``energies`` (ascending) with eigenvectors as the
    columns of ``basis``.

    ``basis`` defaults to the identity, i.e. ``energies[k]`` belongs to the
    k-th matrix index.  Degenerate levels are rejected unless
    ``allow_degenerate`` is set; use :meth:`degenerate` or
    :func:`joint_hamiltonian` for those.
    """

    energies: np.ndarray
    basis: np.ndarray = None
    allow_degenerate: bool = False

    def __post_init__(self):
        e = np.asarray(self.energies, dtype=float).reshape(-1)
        if e.size == 0 or not np.all(np.isfinite(e)):
            raise ErgolabError("energies must be a non-empty finite sequence")
        steps = np.diff(e)
        if self.allow_degenerate:
            if np.any(steps < 0):
                raise ErgolabError("energies must be non-decreasing")
        elif np.any(steps <= 0):
            raise ErgolabError(
                "energies must be strictly ascending; use Hamiltonian.degenerate for ties"
            )
        b = np.eye(e.size, dtype=complex) if self.basis is None else linalg.as_matrix(self.basis)
        if b.shape[0] != e.size:
            raise DimensionError(f"basis has dimension {b.shape[0]}, expected {e.size}")
        if not linalg.is_unitary(b):
            raise ErgolabError("basis is not unitary")
        object.__setattr__(self, "energies", linalg.frozen(e))
        object.__setattr__(self, "basis", linalg.frozen(b))
        object.__setattr__(self, "_matrix", linalg.frozen((b * e) @ b.conj().T))

    @classmethod
    def degenerate(cls, energies, basis=None):
        return cls(energies, basis, allow_degenerate=True)

    @property
    def dim(self):
        return self.energies.size

    @property
    def matrix(self):
        return self._matrix

    @property
    def gap(self):
        return float(self.energies[-1] - self.energies[0])

    def energy(self, rho):
        return float(np.trace(_matrix_of(rho) @ self._matrix).real)


def qubit_hamiltonian(e0=0.0, e1=1.0):
    """``e0|0><0| + e1|1><1|`` in the descending ket layout of
    :mod:`ergolab.linalg` (``|1>`` is the first basis vector)."""
    return Hamiltonian([e0, e1], np.column_stack([linalg.KET0, linalg.KET1]))


def joint_hamiltonian(h_system, ancilla_dim=2):
    """``H_S x I`` for a non-interacting ancilla with zero Hamiltonian."""
    cols = [
        np.kron(h_system.basis[:, k], np.eye(ancilla_dim)[:, j])
        for k in range(h_system.dim)
        for j in range(ancilla_dim)
    ]
    energies = np.repeat(h_system.energies, ancilla_dim)
    return Hamiltonian.degenerate(energies, np.column_stack(cols))


def _matrix_of(rho):
    return rho.matrix if isinstance(rho, DensityMatrix) else linalg.as_matrix(rho)


def _check_dims(rho, h):
    if rho.dim != h.dim:
        raise DimensionError(f"state has dimension {rho.dim}, Hamiltonian {h.dim}")


@dataclass(frozen=True, eq=False)
class ErgotropyResult:
    work: float
    initial_energy: float
    passive_energy: float
    unitary: np.ndarray
    passive_state: DensityMatrix


def passive_energy(rho, h):
    """Energy of the passive state: populations sorted descending against
    ascending levels."""
    rho = as_density(rho)
    _check_dims(rho, h)
    r_desc = rho.eigenvalues[::-1]
    return float(np.dot(r_desc, h.energies))


def ergotropic_unitary(rho, h):
    """``U = sum_i |e_i><r_i|`` with the ``r_i`` taken in descending order."""
    rho = as_density(rho)
    _check_dims(rho, h)
    v_desc = rho.eig.eigenvectors[:, ::-1]
    return h.basis @ v_desc.conj().T


def ergotropy(rho, h):
    rho = as_density(rho)
    _check_dims(rho, h)
    u = ergotropic_unitary(rho, h)
    initial = h.energy(rho)
    final = passive_energy(rho, h)
    passive = DensityMatrix(u @ rho.matrix @ u.conj().T)
    return ErgotropyResult(
        work=initial - final,
        initial_energy=initial,
        passive_energy=final,
        unitary=linalg.frozen(u),
        passive_state=passive,
    )
