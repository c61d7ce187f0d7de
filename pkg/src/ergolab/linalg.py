"""Dense complex linear algebra for small operators.

Matrices are plain ``numpy`` ``complex128`` arrays of shape ``(n, n)``.
Two-party operators use the ordering ``kron(system, ancilla)``; the
computational kets are laid out in descending order, so the product ket
``|s a>`` sits at row ``2*(1 - s) + (1 - a)`` and the single-qubit ket
``|1>`` is the first basis vector.  With that layout the standard Pauli
matrices give ``sigma_z |1> = +|1>``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DimensionError, NotHermitianError

HERMITIAN_TOL = 1e-10
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100
_PHASE_TOL = 1e-10

SYSTEM = "S"
ANCILLA = "A"

IDENTITY2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)

KET1 = np.array([1, 0], dtype=complex)
KET0 = np.array([0, 1], dtype=complex)


def ket(*bits):
    """Computational product ket, e.g. ``ket(1, 0)`` is ``|10>``."""
    out = np.ones(1, dtype=complex)
    for b in bits:
        if b not in (0, 1):
            raise ValueError(f"bits must be 0 or 1, got {b!r}")
        out = np.kron(out, KET1 if b == 1 else KET0)
    return out


def projector(vec):
    """Rank-one projector ``|v><v|`` onto the normalised vector ``vec``."""
    v = np.asarray(vec, dtype=complex)
    v = v / np.linalg.norm(v)
    return np.outer(v, v.conj())


def as_matrix(a):
    """Coerce ``a`` to a finite square complex matrix."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def frozen(a):
    """Return a read-only copy of ``a``."""
    out = np.array(a, copy=True)
    out.setflags(write=False)
    return out


def multiply(a, b):
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a):
    return as_matrix(a).conj().T


def trace(a):
    return complex(np.trace(as_matrix(a)))


def kron(a, b):
    """Kronecker product; ``a`` is the system factor, ``b`` the ancilla."""
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace(m, keep, dims=(2, 2)):
    """Trace out one party of a bipartite operator.

    Parameters
    ----------
    m : array_like
        Operator on the joint space, ordered ``kron(system, ancilla)``.
    keep : {"S", "A"}
        Party to keep.
    dims : tuple of int
        Local dimensions ``(d_system, d_ancilla)``.
    """
    m = as_matrix(m)
    ds, da = dims
    if m.shape[0] != ds * da:
        raise DimensionError(f"partial_trace expects dimension {ds * da}, got {m.shape[0]}")
    t = m.reshape(ds, da, ds, da)
    if keep == SYSTEM:
        return np.einsum("ijkj->ik", t)
    if keep == ANCILLA:
        return np.einsum("ijil->jl", t)
    raise ValueError(f"keep must be 'S' or 'A', got {keep!r}")


def hermiticity_residual(a):
    a = as_matrix(a)
    return float(np.max(np.abs(a - a.conj().T)))


@dataclass(frozen=True)
class HermitianEigenSystem:
    """Eigenvalues in ascending order and matching eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self):
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _jacobi_rotate(a, v, p, q):
    # a, v are lists of rows of Python complex numbers, updated in place
    n = len(a)
    h = a[p][q]
    mag = abs(h)
    ph = h / mag
    phc = ph.conjugate()
    theta = (a[q][q].real - a[p][p].real) / (2.0 * mag)
    if abs(theta) > 1e150:
        t = 0.5 / theta
    else:
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # phase-align the pivot, then apply the real Jacobi rotation:
    # columns  p' = c p - s e^{-i phi} q,  q' = s p + c e^{-i phi} q
    for row in a:
        x, y = row[p], row[q]
        row[p] = c * x - s * phc * y
        row[q] = s * x + c * phc * y
    rp, rq = a[p], a[q]
    for k in range(n):
        x, y = rp[k], rq[k]
        rp[k] = c * x - s * ph * y
        rq[k] = s * x + c * ph * y
    rp[q] = rq[p] = 0j
    rp[p] = complex(rp[p].real, 0.0)
    rq[q] = complex(rq[q].real, 0.0)
    for row in v:
        x, y = row[p], row[q]
        row[p] = c * x - s * phc * y
        row[q] = s * x + c * phc * y


def _fix_phases(vecs):
    n = len(vecs)
    for k in range(n):
        norm = math.sqrt(sum(abs(vecs[i][k]) ** 2 for i in range(n)))
        lead = next((vecs[i][k] for i in range(n) if abs(vecs[i][k]) > _PHASE_TOL * norm), None)
        scale = 1.0 / norm if lead is None else abs(lead) / (lead * norm)
        for i in range(n):
            vecs[i][k] *= scale


def eig_hermitian(a, tol=HERMITIAN_TOL):
    """Cyclic Jacobi eigendecomposition of a Hermitian matrix.

    Sweeps the upper triangle row by row until every off-diagonal
    magnitude is below ``1e-12`` (scaled by the matrix norm when that
    exceeds one).  Eigenvalues come back ascending with a stable sort, and
    each eigenvector's first significant component is real and positive.

    Raises
    ------
    NotHermitianError
        If ``max|A - A^H| > tol``.
    ConvergenceError
        If 100 sweeps do not reach the threshold.
    """
    a = as_matrix(a)
    res = hermiticity_residual(a)
    if res > tol:
        raise NotHermitianError(f"matrix is not Hermitian (residual {res:.3e})")
    return eig_hermitian_unchecked(0.5 * (a + a.conj().T))


def eig_hermitian_unchecked(herm):
    """Jacobi eigensystem of a matrix already known to be exactly Hermitian."""
    n = herm.shape[0]
    threshold = JACOBI_TOL * max(1.0, float(np.linalg.norm(herm)))
    work = herm.tolist()
    vecs = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    def converged():
        return all(abs(work[p][q]) < threshold for p, q in pairs)

    sweeps = 0
    while not converged():
        if sweeps == JACOBI_MAX_SWEEPS:
            raise ConvergenceError(f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps")
        for p, q in pairs:
            if work[p][q] != 0:
                _jacobi_rotate(work, vecs, p, q)
        sweeps += 1

    vals = [work[k][k].real for k in range(n)]
    order = sorted(range(n), key=vals.__getitem__)  # sorted() is stable
    vecs = [[row[k] for k in order] for row in vecs]
    _fix_phases(vecs)
    return HermitianEigenSystem(
        frozen(np.array([vals[k] for k in order])), frozen(np.array(vecs, dtype=complex))
    )


def eigvalsh(a):
    """Ascending eigenvalues of a Hermitian matrix (Jacobi route)."""
    return eig_hermitian(a).eigenvalues


def is_unitary(u, tol=1e-10):
    u = as_matrix(u)
    return float(np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0])))) <= tol
