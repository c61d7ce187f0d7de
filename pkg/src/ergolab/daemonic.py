"""Measurement-assisted work extraction from a system correlated with an
ancilla.

Every quantity here is built from the same ingredients: the projective
branches ``(p_a, rho_{S|a})`` of the ancilla measurement and the passive
energy ``E_a`` of each conditional state after its own ergotropic
unitary ``U_a``.  A method only changes the weight each ``E_a`` receives:

============================  ==========================================
method                        weight of branch ``a``
============================  ==========================================
``daemonic``                  ``p_a``
``weak-nonselective``         ``sum_{y=+x,-x} b_a(y) p_a``
``weak-selective`` (sign)     ``b_a(+-x) p_a / p_{+-x}``
============================  ==========================================

and the extracted work is ``Tr[rho_S H] - sum_a weight_a E_a``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ergotropy import ergotropic_unitary, ergotropy, passive_energy
from .measurement import (
    MINUS,
    PLUS,
    ZERO_PROBABILITY,
    computational_projectors,
    project_ancilla,
    weak_branches,
    weak_weights,
)
from .states import SYSTEM, as_density, reduced_state

PLAIN = "plain"
DAEMONIC = "daemonic"
WEAK_NONSELECTIVE = "weak-nonselective"
WEAK_SELECTIVE = "weak-selective"

TIE_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class BranchWork:
    """A projective ancilla outcome with the passive energy reached by its
    ergotropic unitary.  Absent (zero-probability) branches carry
    ``conditional_state=None`` and never receive weight."""

    label: int
    probability: float
    conditional_state: object
    final_energy: float
    unitary: np.ndarray | None

    @property
    def present(self):
        return self.conditional_state is not None


@dataclass(frozen=True, eq=False)
class WorkReport:
    work: float
    method: str
    initial_energy: float
    branches: tuple
    weights: tuple
    baseline_ergotropy: float
    x: float | None = None
    sign: str | None = None
    delta: float | None = None
    outcomes: tuple = ()

    def residual(self):
        """Deviation from ``initial - sum(weight * final_energy)``."""
        final = sum(w * b.final_energy for w, b in zip(self.weights, self.branches))
        return abs(self.work - (self.initial_energy - final))


@dataclass(frozen=True, eq=False)
class _Setup:
    rho: object
    rho_s: object
    initial: float
    baseline: float
    branches: tuple


def _setup(rho, h, projectors):
    rho = as_density(rho)
    if projectors is None:
        projectors = computational_projectors()
    rho_s = reduced_state(rho, SYSTEM)
    initial = h.energy(rho_s)
    baseline = initial - passive_energy(rho_s, h)
    branches = []
    for br in project_ancilla(rho, projectors):
        if br.present:
            cond = br.conditional_state
            branches.append(BranchWork(
                br.label, br.probability, cond,
                passive_energy(cond, h), ergotropic_unitary(cond, h),
            ))
        else:
            branches.append(BranchWork(br.label, br.probability, None, 0.0, None))
    return _Setup(rho, rho_s, initial, baseline, tuple(branches))


def _report(setup, method, weights, **extra):
    final = sum(w * b.final_energy for w, b in zip(weights, setup.branches))
    return WorkReport(
        work=setup.initial - final,
        method=method,
        initial_energy=setup.initial,
        branches=setup.branches,
        weights=tuple(weights),
        baseline_ergotropy=setup.baseline,
        **extra,
    )


def _projective_weights(setup):
    return [b.probability if b.present else 0.0 for b in setup.branches]


def plain_ergotropy(rho, h):
    """Ergotropy of the reduced system state, as a :class:`WorkReport`."""
    rho_s = reduced_state(as_density(rho), SYSTEM)
    res = ergotropy(rho_s, h)
    branch = BranchWork(None, 1.0, rho_s, res.passive_energy, res.unitary)
    return WorkReport(res.work, PLAIN, res.initial_energy, (branch,), (1.0,), res.work)


def daemonic_ergotropy(rho, h, p=None):
    """Average work after a projective ancilla measurement ``p``
    (computational basis by default) and a per-outcome ergotropic unitary."""
    setup = _setup(rho, h, p)
    return _report(setup, DAEMONIC, _projective_weights(setup))


def daemonic_gain(rho, h, p=None):
    rep = daemonic_ergotropy(rho, h, p)
    return rep.work - rep.baseline_ergotropy


def nonselective_weak_work(rho, h, w):
    """Work averaged over both outcomes of the weak measurement ``w``.

    Each weak outcome ``y`` leaves the mixture ``sum_a b_a(y) p_a
    rho_{S|a} / p_y`` and the ``a`` component is driven by ``U_a``.
    """
    setup = _setup(rho, h, w.projectors)
    weights = []
    for b in setup.branches:
        if not b.present:
            weights.append(0.0)
            continue
        weights.append(sum(weak_weights(y)[b.label] * b.probability for y in (w.x, -w.x)))
    return _report(
        setup, WEAK_NONSELECTIVE, weights,
        x=w.x, outcomes=weak_branches(setup.rho, w),
    )


def _selective_weights(setup, x, sign):
    y = x if sign == PLUS else -x
    bw = weak_weights(y)
    raw = [bw[b.label] * b.probability if b.present else 0.0 for b in setup.branches]
    p_y = sum(raw)
    if p_y < ZERO_PROBABILITY:
        # the outcome never occurs; fall back to the unconditioned average
        return _projective_weights(setup)
    return [r / p_y for r in raw]


def selective_weak_work(rho, h, w, sign):
    """Work after post-selecting the weak outcome ``sign`` (``'+'`` or ``'-'``)."""
    if sign not in (PLUS, MINUS):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    setup = _setup(rho, h, w.projectors)
    weights = _selective_weights(setup, w.x, sign)
    outcome = [o for o in weak_branches(setup.rho, w) if o.label == sign]
    return _report(setup, WEAK_SELECTIVE, weights, x=w.x, sign=sign, outcomes=tuple(outcome))


def c_coefficient(p0, p1, x, sign):
    """``C_+- = 2 p0 p1 tanh x / (1 +- (p1 - p0) tanh x)``."""
    th = math.tanh(x)
    s = 1.0 if sign == PLUS else -1.0
    return 2.0 * p0 * p1 * th / (1.0 + s * (p1 - p0) * th)


def _branch_energy_gap(setup):
    b0, b1 = setup.branches
    if not (b0.present and b1.present):
        return None
    return b0.final_energy - b1.final_energy


def selective_delta(rho, h, w, sign):
    """Closed-form gain of the selective over the projective protocol,
    ``+-C_+- (E_0 - E_1)``."""
    setup = _setup(rho, h, w.projectors)
    return _delta(setup, w.x, sign)


def _delta(setup, x, sign):
    gap = _branch_energy_gap(setup)
    if gap is None:
        return 0.0
    p0, p1 = (b.probability for b in setup.branches)
    s = 1.0 if sign == PLUS else -1.0
    return s * c_coefficient(p0, p1, x, sign) * gap


def choose_sign(e0, e1):
    """``'+'`` unless branch 1 ends strictly higher than branch 0 by more
    than ``1e-12``."""
    return MINUS if e0 - e1 <= -TIE_TOL else PLUS


def super_ergotropy(rho, h, w):
    """Selective weak work for the outcome whose gain is non-negative."""
    setup = _setup(rho, h, w.projectors)
    gap = _branch_energy_gap(setup)
    sign = PLUS if gap is None else choose_sign(gap, 0.0)
    weights = _selective_weights(setup, w.x, sign)
    outcome = [o for o in weak_branches(setup.rho, w) if o.label == sign]
    return _report(
        setup, WEAK_SELECTIVE, weights,
        x=w.x, sign=sign, delta=_delta(setup, w.x, sign), outcomes=tuple(outcome),
    )


def daemonic_geometric(b, delta_eps):
    """``(2 s_3 + |s + t_3| + |s - t_3|) delta_eps / 4`` for computational
    ancilla projectors, where ``t_3`` is the third column of ``t``."""
    if not delta_eps > 0:
        raise ValueError("delta_eps must be positive")
    s = np.asarray(b.s)
    t3 = np.asarray(b.t)[:, 2]
    return (2.0 * s[2] + np.linalg.norm(s + t3) + np.linalg.norm(s - t3)) * delta_eps / 4.0


def local_work(rho, h):
    """Ergotropy of the reduced system state (the ancilla has no energy)."""
    rho_s = reduced_state(as_density(rho), SYSTEM)
    return h.energy(rho_s) - passive_energy(rho_s, h)


def local_work_closed_form(s, delta_eps):
    """``(s_3 + |s|) delta_eps / 2``."""
    s = np.asarray(s, dtype=float)
    return (s[2] + np.linalg.norm(s)) * delta_eps / 2.0
