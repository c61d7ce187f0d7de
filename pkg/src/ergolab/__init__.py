"""Ergotropy and measurement-assisted work extraction for qubit systems
correlated with an ancilla."""

from .daemonic import (
    WorkReport,
    c_coefficient,
    daemonic_ergotropy,
    daemonic_gain,
    daemonic_geometric,
    local_work,
    nonselective_weak_work,
    selective_delta,
    selective_weak_work,
    super_ergotropy,
)
from .ergotropy import (
    ErgotropyResult,
    Hamiltonian,
    ergotropic_unitary,
    ergotropy,
    joint_hamiltonian,
    passive_energy,
    qubit_hamiltonian,
)
from .errors import ErgolabError, InvalidStateError
from .measurement import (
    ProjectorPair,
    WeakMeasurement,
    computational_projectors,
    measure_total,
    povm_elements,
    project_ancilla,
    weak_branch,
    weak_operators,
)
from .nonlocal_work import (
    NonlocalReport,
    classical_nonlocal_work,
    classical_total_work,
    nonlocal_report,
    nonlocal_work,
    quantum_correlation,
    total_ergotropy,
)
from .states import (
    BellDiagonalParams,
    BlochTwoQubit,
    DensityMatrix,
    bell_diagonal,
    from_bloch,
    random_density,
    reduced_state,
    third_mixture,
    to_bloch,
    validate_density,
)

__version__ = "0.1.0"
