import numpy as np
import pytest

from ergolab.ergotropy import qubit_hamiltonian
from ergolab.measurement import computational_projectors


@pytest.fixture
def h():
    """Default qubit Hamiltonian, e0 = 0 and e1 = 1."""
    return qubit_hamiltonian(0.0, 1.0)


@pytest.fixture
def comp():
    return computational_projectors()


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


def random_hermitian(rng, n, scale=1.0):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (g + g.conj().T) / 2


def random_unitary(rng, n):
    q, r = np.linalg.qr(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    return q * (np.diag(r) / np.abs(np.diag(r)))
