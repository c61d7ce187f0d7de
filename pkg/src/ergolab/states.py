"""Density matrices: validation, two-qubit Bloch form, Bell-diagonal family."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import DimensionError, InvalidStateError
from .linalg import ANCILLA, IDENTITY2, PAULIS, SYSTEM

STATE_TOL = 1e-10
BELL_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated quantum state.

    Construction checks Hermiticity, unit trace and positivity (all to
    ``1e-10``) and raises :class:`InvalidStateError` naming the violated
    invariant.  The Jacobi eigensystem computed during validation is kept
    on ``eig`` so downstream energy calculations do not redo it.
    """

    matrix: np.ndarray
    eig: linalg.HermitianEigenSystem = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        m = linalg.as_matrix(self.matrix)
        res = linalg.hermiticity_residual(m)
        if res > STATE_TOL:
            raise InvalidStateError("hermiticity", res)
        tr = np.trace(m).real
        if abs(tr - 1.0) > STATE_TOL:
            raise InvalidStateError("unit trace", abs(tr - 1.0))
        m = 0.5 * (m + m.conj().T)
        eig = linalg.eig_hermitian_unchecked(m)
        if eig.eigenvalues[0] < -STATE_TOL:
            raise InvalidStateError(
                "positivity", -eig.eigenvalues[0],
                f"positivity violated: negative eigenvalue {eig.eigenvalues[0]:.3e}",
            )
        object.__setattr__(self, "matrix", linalg.frozen(m))
        object.__setattr__(self, "eig", eig)

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def eigenvalues(self):
        return self.eig.eigenvalues

    def purity(self):
        return float(np.trace(self.matrix @ self.matrix).real)

    def expectation(self, op):
        return complex(np.trace(self.matrix @ op))


def validate_density(m):
    return DensityMatrix(m)


def as_density(state):
    """Pass a :class:`DensityMatrix` through, validate anything else."""
    if isinstance(state, DensityMatrix):
        return state
    return DensityMatrix(state)


def _require_two_qubit(rho):
    if rho.dim != 4:
        raise DimensionError(f"expected a two-qubit (dim 4) state, got dim {rho.dim}")


@dataclass(frozen=True, eq=False)
class BlochTwoQubit:
    """Two-qubit state in Pauli form: local vectors ``s`` (system), ``r``
    (ancilla) and the 3x3 correlation matrix ``t``."""

    s: np.ndarray
    r: np.ndarray
    t: np.ndarray

    def __post_init__(self):
        s = np.asarray(self.s, dtype=float).reshape(3)
        r = np.asarray(self.r, dtype=float).reshape(3)
        t = np.asarray(self.t, dtype=float).reshape(3, 3)
        for name, vec in (("|s| <= 1", s), ("|r| <= 1", r)):
            excess = np.linalg.norm(vec) - 1.0
            if excess > STATE_TOL:
                raise InvalidStateError(name, excess)
        object.__setattr__(self, "s", linalg.frozen(s))
        object.__setattr__(self, "r", linalg.frozen(r))
        object.__setattr__(self, "t", linalg.frozen(t))
        # raises if the parameters are not a physical state
        object.__setattr__(self, "_state", DensityMatrix(_bloch_matrix(s, r, t)))

    def density(self):
        return self._state


def _bloch_matrix(s, r, t):
    m = np.eye(4, dtype=complex)
    for i, sig in enumerate(PAULIS):
        m = m + s[i] * np.kron(sig, IDENTITY2) + r[i] * np.kron(IDENTITY2, sig)
        for j, sig2 in enumerate(PAULIS):
            m = m + t[i, j] * np.kron(sig, sig2)
    return m / 4.0


def from_bloch(b):
    return b.density()


def to_bloch(rho):
    """Extract ``s_i = Tr[rho sigma_i x I]``, ``r_j`` and ``t_ij``."""
    rho = as_density(rho)
    _require_two_qubit(rho)
    m = rho.matrix
    s = [np.trace(m @ np.kron(sig, IDENTITY2)).real for sig in PAULIS]
    r = [np.trace(m @ np.kron(IDENTITY2, sig)).real for sig in PAULIS]
    t = [[np.trace(m @ np.kron(a, b)).real for b in PAULIS] for a in PAULIS]
    return BlochTwoQubit(np.array(s), np.array(r), np.array(t))


@dataclass(frozen=True)
class BellDiagonalParams:
    """Correlation coefficients ``(c1, c2, c3)`` of a Bell-diagonal state."""

    c: tuple

    def __post_init__(self):
        c = tuple(float(v) for v in np.asarray(self.c, dtype=float).reshape(3))
        worst = max(abs(v) for v in c)
        if worst > 1.0 + BELL_TOL:
            raise InvalidStateError("|c_i| <= 1", worst - 1.0)
        lam = bell_eigenvalues(c)
        if min(lam) < -BELL_TOL:
            raise InvalidStateError("Bell-diagonal positivity", -min(lam))
        object.__setattr__(self, "c", c)

    def eigenvalues(self):
        return bell_eigenvalues(self.c)


def bell_eigenvalues(c):
    """The four eigenvalues of ``(I + sum c_i sigma_i x sigma_i)/4``.

    Ordered as the singlet-like, then the remaining three Bell states; the
    unnormalised weights are ``1 - c1 - c2 - c3`` etc., divided by four.
    """
    c1, c2, c3 = c
    return (
        (1 - c1 - c2 - c3) / 4,
        (1 - c1 + c2 + c3) / 4,
        (1 + c1 - c2 + c3) / 4,
        (1 + c1 + c2 - c3) / 4,
    )


def is_bell_physical(c):
    try:
        BellDiagonalParams(c)
    except InvalidStateError:
        return False
    return True


def bell_diagonal(p):
    if not isinstance(p, BellDiagonalParams):
        p = BellDiagonalParams(p)
    m = np.eye(4, dtype=complex)
    for ci, sig in zip(p.c, PAULIS):
        m = m + ci * np.kron(sig, sig)
    return DensityMatrix(m / 4.0)


def reduced_state(rho, keep=SYSTEM):
    rho = as_density(rho)
    _require_two_qubit(rho)
    return DensityMatrix(linalg.partial_trace(rho.matrix, keep))


def random_density(dim, seed, kind="mixed"):
    """Seeded random state.

    ``mixed`` draws from the Hilbert-Schmidt ensemble (``G G^H`` with a
    complex Ginibre ``G``), ``pure`` projects onto a normalised complex
    Gaussian vector and ``bell-diagonal`` rejection-samples ``c`` uniformly
    from ``[-1, 1]^3``.
    """
    rng = np.random.default_rng(seed)
    if kind == "mixed":
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        m = g @ g.conj().T
        m = m / np.trace(m).real
    elif kind == "pure":
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        m = linalg.projector(v)
    elif kind == "bell-diagonal":
        if dim != 4:
            raise DimensionError("bell-diagonal states are two-qubit (dim 4)")
        while True:
            c = rng.uniform(-1.0, 1.0, size=3)
            if min(bell_eigenvalues(c)) >= 0:
                return bell_diagonal(c)
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return DensityMatrix(0.5 * (m + m.conj().T))


def product_state(rho_s, rho_a):
    return DensityMatrix(np.kron(as_density(rho_s).matrix, as_density(rho_a).matrix))


def third_mixture():
    """``(|11><11| + |10><10| + |01><01|)/3``."""
    m = sum(linalg.projector(linalg.ket(*bits)) for bits in ((1, 1), (1, 0), (0, 1)))
    return DensityMatrix(m / 3.0)


def psi_theta(theta):
    """``cos(theta)|00> + sin(theta)|11>``."""
    v = math.cos(theta) * linalg.ket(0, 0) + math.sin(theta) * linalg.ket(1, 1)
    return DensityMatrix(linalg.projector(v))


def phi_w():
    """``(|11> + |10> + |01>)/sqrt(3)``."""
    v = linalg.ket(1, 1) + linalg.ket(1, 0) + linalg.ket(0, 1)
    return DensityMatrix(linalg.projector(v))


NAMED_STATES = {
    "third-mixture": third_mixture,
    "psi-theta": psi_theta,
    "phi-w": phi_w,
}


__all__ = [
    "ANCILLA",
    "SYSTEM",
    "BellDiagonalParams",
    "BlochTwoQubit",
    "DensityMatrix",
    "NAMED_STATES",
    "as_density",
    "bell_diagonal",
    "bell_eigenvalues",
    "from_bloch",
    "is_bell_physical",
    "phi_w",
    "product_state",
    "psi_theta",
    "random_density",
    "reduced_state",
    "third_mixture",
    "to_bloch",
    "validate_density",
]
