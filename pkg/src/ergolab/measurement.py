"""Projective and weak measurements on the ancilla, and projective
measurement of the whole two-qubit system."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, ErgolabError
from .linalg import ANCILLA, IDENTITY2
from .states import DensityMatrix, as_density

PROJECTOR_TOL = 1e-10
ZERO_PROBABILITY = 1e-12

PLUS = "+"
MINUS = "-"


@dataclass(frozen=True, eq=False)
class ProjectorPair:
    """Two orthogonal rank-one projectors summing to the identity."""

    pi0: np.ndarray
    pi1: np.ndarray

    def __post_init__(self):
        pi0 = linalg.as_matrix(self.pi0)
        pi1 = linalg.as_matrix(self.pi1)
        if pi0.shape != (2, 2) or pi1.shape != (2, 2):
            raise DimensionError("ancilla projectors must be 2x2")
        for name, p in (("pi0", pi0), ("pi1", pi1)):
            _check_projector(p, name)
        if np.max(np.abs(pi0 @ pi1)) > PROJECTOR_TOL:
            raise ErgolabError("projectors are not orthogonal")
        if np.max(np.abs(pi0 + pi1 - IDENTITY2)) > PROJECTOR_TOL:
            raise ErgolabError("projectors do not sum to the identity")
        object.__setattr__(self, "pi0", linalg.frozen(pi0))
        object.__setattr__(self, "pi1", linalg.frozen(pi1))

    @classmethod
    def along(cls, vec):
        """``pi1 = |v><v|`` and ``pi0`` its orthogonal complement."""
        pi1 = linalg.projector(vec)
        return cls(IDENTITY2 - pi1, pi1)

    def __iter__(self):
        return iter((self.pi0, self.pi1))


def _check_projector(p, name):
    if linalg.hermiticity_residual(p) > PROJECTOR_TOL:
        raise ErgolabError(f"{name} is not Hermitian")
    if np.max(np.abs(p @ p - p)) > PROJECTOR_TOL:
        raise ErgolabError(f"{name} is not idempotent")
    if abs(np.trace(p).real - 1.0) > PROJECTOR_TOL:
        raise ErgolabError(f"{name} is not rank one")


def computational_projectors():
    """``pi0 = |0><0|``, ``pi1 = |1><1|``."""
    return ProjectorPair(linalg.projector(linalg.KET0), linalg.projector(linalg.KET1))


def weak_weights(x):
    """``(b0(x), b1(x)) = ((1 - tanh x)/2, (1 + tanh x)/2)``; ``x`` may be
    negative.

    Evaluated in logistic form, ``b0 = e/(1 + e)`` with ``e = exp(-2x)``,
    so the small weight keeps full relative precision for large ``x``.
    """
    x = float(x)
    e = math.exp(-2.0 * abs(x))
    small, large = e / (1.0 + e), 1.0 / (1.0 + e)
    return (small, large) if x >= 0 else (large, small)


def _signed(x, sign):
    if sign == PLUS:
        return x
    if sign == MINUS:
        return -x
    raise ValueError(f"sign must be '+' or '-', got {sign!r}")


@dataclass(frozen=True, eq=False)
class WeakMeasurement:
    """Two-outcome measurement of strength ``x`` built on a projector pair.

    ``P(+x)`` tends to ``pi1`` and ``P(-x)`` to ``pi0`` as ``x`` grows.
    """

    x: float
    projectors: ProjectorPair

    def __post_init__(self):
        x = float(self.x)
        if not math.isfinite(x) or x < 0:
            raise ErgolabError(f"measurement strength must be finite and >= 0, got {self.x}")
        object.__setattr__(self, "x", x)

    def weights(self, sign):
        return weak_weights(_signed(self.x, sign))


def weak_operators(w):
    """``(P(+x), P(-x))`` with ``P(y) = sqrt(b0(y)) pi0 + sqrt(b1(y)) pi1``."""
    pi0, pi1 = w.projectors
    out = []
    for sign in (PLUS, MINUS):
        b0, b1 = w.weights(sign)
        out.append(math.sqrt(b0) * pi0 + math.sqrt(b1) * pi1)
    return tuple(out)


def povm_elements(w):
    """``(E(x), E(-x))`` with ``E(y) = b0(y) pi0 + b1(y) pi1``."""
    pi0, pi1 = w.projectors
    out = []
    for sign in (PLUS, MINUS):
        b0, b1 = w.weights(sign)
        out.append(b0 * pi0 + b1 * pi1)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class MeasurementBranch:
    """One outcome: its probability and the normalised post-measurement
    state (``None`` when the probability is below ``1e-12``)."""

    label: object
    probability: float
    conditional_state: DensityMatrix | None

    @property
    def present(self):
        return self.conditional_state is not None


def _branch(label, unnormalised, prob):
    if prob < ZERO_PROBABILITY:
        return MeasurementBranch(label, max(prob, 0.0), None)
    return MeasurementBranch(label, prob, DensityMatrix(unnormalised / prob))


def _require_two_qubit(rho):
    if rho.dim != 4:
        raise DimensionError(f"expected a two-qubit (dim 4) state, got dim {rho.dim}")


def _condition_system(rho, op):
    """``Tr_A[(I x M) rho (I x M^H)]`` and its trace."""
    t = rho.matrix.reshape(2, 2, 2, 2)
    unnorm = np.einsum("ba,iajc,bc->ij", op, t, op.conj())
    return unnorm, float(np.trace(unnorm).real)


def project_ancilla(rho, p):
    """Projective measurement of the ancilla; returns branches ``(0, 1)``."""
    rho = as_density(rho)
    _require_two_qubit(rho)
    return tuple(_branch(a, *_condition_system(rho, pi)) for a, pi in enumerate(p))


def weak_branch(rho, w, sign):
    """Outcome ``sign`` of the weak measurement ``w`` on the ancilla."""
    rho = as_density(rho)
    _require_two_qubit(rho)
    b0, b1 = w.weights(sign)
    pi0, pi1 = w.projectors
    op = math.sqrt(b0) * pi0 + math.sqrt(b1) * pi1
    return _branch(sign, *_condition_system(rho, op))


def weak_branches(rho, w):
    return tuple(weak_branch(rho, w, sign) for sign in (PLUS, MINUS))


def computational_total_projectors():
    """``{|11>, |10>, |01>, |00>}`` projectors keyed by their bit labels."""
    return {
        f"{s}{a}": linalg.projector(linalg.ket(s, a))
        for s, a in ((1, 1), (1, 0), (0, 1), (0, 0))
    }


def _check_total_projectors(projectors):
    mats = [linalg.as_matrix(p) for p in projectors.values()]
    if len(mats) != 4 or any(m.shape != (4, 4) for m in mats):
        raise DimensionError("need four 4x4 projectors")
    for label, m in zip(projectors, mats):
        _check_projector(m, f"projector {label}")
    for i in range(4):
        for j in range(i + 1, 4):
            if np.max(np.abs(mats[i] @ mats[j])) > PROJECTOR_TOL:
                raise ErgolabError("total-system projectors are not pairwise orthogonal")
    if np.max(np.abs(sum(mats) - np.eye(4))) > PROJECTOR_TOL:
        raise ErgolabError("total-system projectors are not complete")


def measure_total(rho, projectors=None):
    """Measure the joint system with four rank-one projectors.

    ``projectors`` maps labels to matrices and defaults to the
    computational basis.  Branch ``ij`` has probability ``Tr[Pi_ij rho]``
    and state ``Pi_ij rho Pi_ij / p_ij``.
    """
    rho = as_density(rho)
    _require_two_qubit(rho)
    if projectors is None:
        projectors = computational_total_projectors()
    _check_total_projectors(projectors)
    out = []
    for label, pi in projectors.items():
        pi = linalg.as_matrix(pi)
        unnorm = pi @ rho.matrix @ pi
        out.append(_branch(label, unnorm, float(np.trace(unnorm).real)))
    return tuple(out)


__all__ = [
    "ANCILLA",
    "MINUS",
    "PLUS",
    "MeasurementBranch",
    "ProjectorPair",
    "WeakMeasurement",
    "computational_projectors",
    "computational_total_projectors",
    "measure_total",
    "povm_elements",
    "project_ancilla",
    "weak_branch",
    "weak_branches",
    "weak_operators",
    "weak_weights",
]
