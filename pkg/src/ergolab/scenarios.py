"""Figure data generators, JSON state descriptors and the seeded
property-verification suite."""

from __future__ import annotations

import csv
import io
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .daemonic import (
    daemonic_ergotropy,
    daemonic_gain,
    daemonic_geometric,
    local_work,
    nonselective_weak_work,
    selective_delta,
    selective_weak_work,
    super_ergotropy,
)
from .ergotropy import joint_hamiltonian, passive_energy, qubit_hamiltonian
from .errors import ErgolabError
from .measurement import (
    MINUS,
    PLUS,
    ProjectorPair,
    WeakMeasurement,
    computational_projectors,
    weak_branches,
)
from .nonlocal_work import (
    classical_nonlocal_work,
    classical_total_work,
    nonlocal_work,
    quantum_correlation,
)
from .states import (
    NAMED_STATES,
    BellDiagonalParams,
    BlochTwoQubit,
    DensityMatrix,
    bell_diagonal,
    is_bell_physical,
    random_density,
    reduced_state,
    third_mixture,
    to_bloch,
)

DEFAULT_TOLERANCE = 1e-10
INEQUALITY_SLACK = 1e-12
WEAK_STRENGTHS = (0.0, 0.1, 0.5, 1.0, 2.0, 5.0)

FIG1_HEADER = ("x", "W_selective", "W_daemonic", "ratio")
FIG2_HEADER = ("ratio1", "ratio3", "C")
FIG3_HEADER = ("theta", "W_nonloc/delta_eps", "W_classical_nonloc/delta_eps")
FIG4_HEADER = ("theta", "C")


@dataclass(frozen=True)
class Sweep:
    """An evenly spaced, strictly increasing grid ``linspace(start, stop, count)``."""

    var: str
    start: float
    stop: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise ErgolabError("sweep count must be at least 2")
        if not self.stop > self.start:
            raise ErgolabError("sweep grid must be strictly increasing (stop > start)")

    @classmethod
    def parse(cls, text):
        try:
            var, start, stop, count = text.split(":")
            return cls(var, float(start), float(stop), int(count))
        except ValueError as exc:
            if isinstance(exc, ErgolabError):
                raise
            raise ErgolabError(f"bad sweep {text!r}; expected var:start:stop:count") from exc

    def grid(self):
        return np.linspace(self.start, self.stop, self.count)


FIG1_GRID = Sweep("x", 0.0, 5.0, 101)
THETA_GRID = Sweep("theta", 0.0, math.pi, 181)
RATIO_GRID = Sweep("ratio", -2.0, 2.0, 81)


@dataclass(frozen=True)
class ScenarioConfig:
    scenario: str
    state: dict | None = None
    energies: tuple = (0.0, 1.0)
    sweeps: tuple = ()
    seed: int = 42
    output: str | None = None
    count: int = 1000
    x: float = 1.0
    c2: float = -0.5

    def sweep(self, var, default):
        for s in self.sweeps:
            if s.var == var:
                return s
        return default


def _grid(values, default):
    return default.grid() if values is None else np.asarray(values, dtype=float)


def run_fig1(xs=None, energies=(0.0, 1.0)):
    """Selective over projective work for the one-third mixture versus
    measurement strength."""
    h = qubit_hamiltonian(*energies)
    rho = third_mixture()
    proj = computational_projectors()
    w_d = daemonic_ergotropy(rho, h, proj).work
    rows = []
    for x in _grid(xs, FIG1_GRID):
        w_s = super_ergotropy(rho, h, WeakMeasurement(x, proj)).work
        rows.append((float(x), w_s, w_d, w_s / w_d))
    return FIG1_HEADER, rows


def run_fig2(ratios1=None, ratios3=None, c2=-0.5):
    """Correlation over a grid of ``c1/c2`` and ``c3/c2`` at fixed ``c2``;
    non-physical points keep their row with an empty ``C``."""
    rows = []
    for r1 in _grid(ratios1, RATIO_GRID):
        for r3 in _grid(ratios3, RATIO_GRID):
            c = (r1 * c2, c2, r3 * c2)
            val = quantum_correlation(c) if is_bell_physical(c) else None
            rows.append((float(r1), float(r3), val))
    return FIG2_HEADER, rows


def _fig34_state(theta):
    return (0.5, -0.5, math.sin(theta))


def run_fig3(thetas=None, energies=(0.0, 1.0)):
    h = qubit_hamiltonian(*energies)
    rows = []
    for th in _grid(thetas, THETA_GRID):
        rho = bell_diagonal(_fig34_state(th))
        rows.append((
            float(th),
            nonlocal_work(rho, h) / h.gap,
            classical_nonlocal_work(rho, h) / h.gap,
        ))
    return FIG3_HEADER, rows


def run_fig4(thetas=None):
    return FIG4_HEADER, [
        (float(th), quantum_correlation(_fig34_state(th))) for th in _grid(thetas, THETA_GRID)
    ]


def format_value(v):
    if v is None:
        return ""
    if isinstance(v, str):
        return v
    return f"{v:.12g}"


def to_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


# -- state descriptors ------------------------------------------------------

def state_from_descriptor(desc):
    """Build a state from a JSON-style descriptor.

    Accepted forms::

        {"kind": "dense", "dim": N, "re": [[...]], "im": [[...]]}
        {"kind": "bloch2q", "s": [3], "r": [3], "t": [[3x3]]}
        {"kind": "bell", "c": [3]}
        {"kind": "example", "name": "third-mixture" | "psi-theta" | "phi-w"}

    ``psi-theta`` takes an optional ``"theta"`` (default ``pi/8``).
    """
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ErgolabError("state descriptor must be an object with a 'kind' field")
    kind = desc["kind"]
    if kind == "dense":
        re = np.asarray(desc["re"], dtype=float)
        im = np.asarray(desc.get("im", np.zeros_like(re)), dtype=float)
        m = re + 1j * im
        if "dim" in desc and m.shape != (desc["dim"], desc["dim"]):
            raise ErgolabError(f"dense state shape {m.shape} does not match dim {desc['dim']}")
        return DensityMatrix(m)
    if kind == "bloch2q":
        return BlochTwoQubit(desc["s"], desc["r"], desc["t"]).density()
    if kind == "bell":
        return bell_diagonal(BellDiagonalParams(desc["c"]))
    if kind == "example":
        name = desc.get("name")
        if name not in NAMED_STATES:
            raise ErgolabError(f"unknown example {name!r}; choose from {sorted(NAMED_STATES)}")
        if name == "psi-theta":
            return NAMED_STATES[name](float(desc.get("theta", math.pi / 8)))
        return NAMED_STATES[name]()
    raise ErgolabError(f"unknown state kind {kind!r}")


# -- property verification -------------------------------------------------

@dataclass
class PropertyResult:
    name: str
    kind: str  # "equality" or "inequality"
    threshold: float
    worst: float = 0.0
    cases: int = 0

    @property
    def passed(self):
        return self.worst <= self.threshold

    def record(self, residual):
        self.cases += 1
        if not residual <= self.worst:
            self.worst = float(residual)


@dataclass
class VerifyReport:
    seed: int
    count: int
    tolerance: float
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    def lines(self):
        out = [f"verify seed={self.seed} count={self.count} tolerance={self.tolerance:g}"]
        for r in self.results:
            status = "PASS" if r.passed else "FAIL"
            out.append(
                f"{status} {r.name}: worst residual {r.worst:.3e} "
                f"(limit {r.threshold:.0e}, {r.cases} checks)"
            )
        return out


def random_projector_pair(seed):
    rng = np.random.default_rng(seed)
    return ProjectorPair.along(rng.standard_normal(2) + 1j * rng.standard_normal(2))


def _permutation_ergotropy(rho, h):
    """Brute-force maximum over all eigenvalue-to-level pairings."""
    r = rho.eigenvalues
    initial = h.energy(rho)
    return max(initial - float(np.dot(r, np.asarray(perm))) for perm in itertools.permutations(h.energies))


def _case_states(seed, count):
    rng = np.random.default_rng(seed)
    for case_seed in rng.integers(0, 2**63 - 1, size=count):
        case_seed = int(case_seed)
        kind = "pure" if case_seed % 5 == 0 else "mixed"
        yield case_seed, random_density(4, case_seed, kind)


def run_verify(seed=42, count=1000, tolerance=DEFAULT_TOLERANCE, energies=(0.0, 1.0), extra_states=()):
    """Check every library invariant on ``count`` seeded random two-qubit
    states (plus ``extra_states``) and record the worst residual of each."""
    h = qubit_hamiltonian(*energies)
    hj = joint_hamiltonian(h)
    gap = h.gap
    props = {
        name: PropertyResult(name, kind, tolerance if kind == "equality" else INEQUALITY_SLACK)
        for name, kind in (
            ("nonselective_equals_daemonic", "equality"),
            ("super_dominates_daemonic", "inequality"),
            ("chosen_sign_is_best", "inequality"),
            ("selective_delta_closed_form", "equality"),
            ("daemonic_gain_nonnegative", "inequality"),
            ("geometric_daemonic_identity", "equality"),
            ("daemonic_at_least_local", "inequality"),
            ("classical_total_work_closed_form", "equality"),
            ("classical_nonlocal_work_closed_form", "equality"),
            ("ergotropy_permutation_oracle", "equality"),
            ("weak_branches_average_to_reduced_state", "equality"),
            ("weak_branch_probabilities_sum_to_one", "equality"),
        )
    }

    def rec(name, value):
        props[name].record(value)

    cases = list(_case_states(seed, count))
    cases += [(None, s) for s in extra_states]
    comp = computational_projectors()
    for case_seed, rho in cases:
        proj = comp if case_seed is None else random_projector_pair([case_seed, 1])
        w_d = daemonic_ergotropy(rho, h, proj).work
        rho_s = reduced_state(rho)
        for x in WEAK_STRENGTHS:
            w = WeakMeasurement(x, proj)
            rec("nonselective_equals_daemonic", abs(nonselective_weak_work(rho, h, w).work - w_d))
            outcomes = weak_branches(rho, w)
            rec("weak_branch_probabilities_sum_to_one", abs(sum(o.probability for o in outcomes) - 1.0))
            mix = sum(o.probability * o.conditional_state.matrix for o in outcomes if o.present)
            rec("weak_branches_average_to_reduced_state", float(np.max(np.abs(mix - rho_s.matrix))))
            if x == 0:
                continue
            sup = super_ergotropy(rho, h, w)
            rec("super_dominates_daemonic", max(0.0, w_d - sup.work))
            other = MINUS if sup.sign == PLUS else PLUS
            rec("chosen_sign_is_best",
                max(0.0, selective_weak_work(rho, h, w, other).work - sup.work))
            for sign in (PLUS, MINUS):
                direct = selective_weak_work(rho, h, w, sign).work - w_d
                rec("selective_delta_closed_form", abs(selective_delta(rho, h, w, sign) - direct))

        rec("daemonic_gain_nonnegative", max(0.0, -daemonic_gain(rho, h, proj)))
        b = to_bloch(rho)
        w_dc = daemonic_ergotropy(rho, h, comp).work
        rec("geometric_daemonic_identity", abs(daemonic_geometric(b, gap) - w_dc))
        rec("daemonic_at_least_local", max(0.0, local_work(rho, h) - w_dc))
        s = np.asarray(b.s)
        rec("classical_total_work_closed_form",
            abs(classical_total_work(rho, h) - (1.0 + s[2]) * gap / 2.0))
        rec("classical_nonlocal_work_closed_form",
            abs(classical_nonlocal_work(rho, h) - (1.0 - np.linalg.norm(s)) * gap / 2.0))
        w_tot = hj.energy(rho) - passive_energy(rho, hj)
        rec("ergotropy_permutation_oracle", abs(w_tot - _permutation_ergotropy(rho, hj)))

    report = VerifyReport(seed, count, tolerance)
    report.results = list(props.values()) if cases else []
    return report


__all__ = [
    "FIG1_HEADER",
    "FIG2_HEADER",
    "FIG3_HEADER",
    "FIG4_HEADER",
    "PropertyResult",
    "ScenarioConfig",
    "Sweep",
    "VerifyReport",
    "format_value",
    "random_projector_pair",
    "run_fig1",
    "run_fig2",
    "run_fig3",
    "run_fig4",
    "run_verify",
    "state_from_descriptor",
    "to_csv",
]
