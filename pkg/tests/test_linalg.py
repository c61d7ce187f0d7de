import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from ergolab import linalg
from ergolab.errors import DimensionError, NotHermitianError
from ergolab.linalg import IDENTITY2, SIGMA_X, SIGMA_Y, SIGMA_Z

from conftest import random_hermitian


def test_multiply_examples():
    assert_allclose(linalg.multiply(IDENTITY2, IDENTITY2), IDENTITY2)
    assert_allclose(linalg.multiply(SIGMA_X, SIGMA_X), IDENTITY2)
    # hand product: [[0,1],[1,0]] @ [[0,-i],[i,0]] = [[i,0],[0,-i]]
    assert_allclose(linalg.multiply(SIGMA_X, SIGMA_Y), np.array([[1j, 0], [0, -1j]]))
    assert_allclose(linalg.multiply(SIGMA_X, SIGMA_Y), 1j * SIGMA_Z)


def test_multiply_dimension_mismatch():
    with pytest.raises(DimensionError):
        linalg.multiply(IDENTITY2, np.eye(4))


def test_adjoint_examples():
    assert_allclose(linalg.adjoint(IDENTITY2), IDENTITY2)
    assert_allclose(linalg.adjoint(SIGMA_Y), SIGMA_Y)
    assert_allclose(linalg.adjoint(np.diag([1j, -1j])), np.diag([-1j, 1j]))


def test_trace_examples():
    assert linalg.trace(np.eye(4)) == 4
    assert linalg.trace(SIGMA_Z) == 0
    one = linalg.projector(linalg.KET1)
    assert linalg.trace(linalg.kron(one, IDENTITY2)) == pytest.approx(2)


def test_kron_examples():
    assert_allclose(linalg.kron(IDENTITY2, IDENTITY2), np.eye(4))
    assert_allclose(linalg.kron(SIGMA_Z, IDENTITY2), np.diag([1, 1, -1, -1]))
    p10 = linalg.kron(linalg.projector(linalg.KET1), linalg.projector(linalg.KET0))
    assert_allclose(p10, linalg.projector(linalg.ket(1, 0)))


def test_ket_layout_is_descending():
    # |s a> sits at row 2(1-s) + (1-a)
    for s in (0, 1):
        for a in (0, 1):
            v = linalg.ket(s, a)
            assert np.flatnonzero(v).tolist() == [2 * (1 - s) + (1 - a)]
    assert_allclose(SIGMA_Z @ linalg.KET1, linalg.KET1)


def test_partial_trace_examples(rng):
    a = random_hermitian(rng, 2)
    a = a @ a + np.eye(2)
    b = random_hermitian(rng, 2)
    b = b @ b + np.eye(2)
    a, b = a / np.trace(a), b / np.trace(b)
    assert_allclose(linalg.partial_trace(np.kron(a, b), "S"), a, atol=1e-12)
    assert_allclose(linalg.partial_trace(np.kron(a, b), "A"), b, atol=1e-12)
    assert_allclose(linalg.partial_trace(np.eye(4) / 4, "A"), np.eye(2) / 2)


def test_partial_trace_errors():
    with pytest.raises(DimensionError):
        linalg.partial_trace(np.eye(2), "S")
    with pytest.raises(ValueError):
        linalg.partial_trace(np.eye(4), "B")


def test_eig_examples():
    e = linalg.eig_hermitian(IDENTITY2)
    assert_allclose(e.eigenvalues, [1, 1])
    e = linalg.eig_hermitian(SIGMA_Z)
    assert_allclose(e.eigenvalues, [-1, 1])
    e = linalg.eig_hermitian(SIGMA_X)
    assert_allclose(e.eigenvalues, [-1, 1], atol=1e-15)
    r = 1 / np.sqrt(2)
    # phase convention: first component real and positive
    assert_allclose(e.eigenvectors[:, 0], [r, -r], atol=1e-15)
    assert_allclose(e.eigenvectors[:, 1], [r, r], atol=1e-15)


def test_eig_rejects_non_hermitian():
    with pytest.raises(NotHermitianError):
        linalg.eig_hermitian(np.array([[0, 1], [0, 0]]))


def test_eig_deterministic(rng):
    a = random_hermitian(rng, 4)
    e1, e2 = linalg.eig_hermitian(a), linalg.eig_hermitian(a.copy())
    assert np.array_equal(e1.eigenvalues, e2.eigenvalues)
    assert np.array_equal(e1.eigenvectors, e2.eigenvectors)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6])
def test_eig_against_lapack(rng, n):
    for _ in range(50):
        a = random_hermitian(rng, n, scale=rng.uniform(0.1, 10))
        e = linalg.eig_hermitian(a)
        assert_allclose(e.eigenvalues, np.linalg.eigvalsh(a), atol=1e-10)
        assert np.max(np.abs(e.reconstruct() - a)) <= 1e-10
        v = e.eigenvectors
        assert np.max(np.abs(v.conj().T @ v - np.eye(n))) <= 1e-10
        assert np.all(np.diff(e.eigenvalues) >= 0)


def test_eig_degenerate_and_diagonal():
    a = np.diag([2.0, -1.0, 2.0, 0.5]).astype(complex)
    e = linalg.eig_hermitian(a)
    assert_allclose(e.eigenvalues, [-1, 0.5, 2, 2])
    assert_allclose(e.reconstruct(), a, atol=1e-14)


finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False)


@st.composite
def complex_matrices(draw, n):
    re = draw(st.lists(finite, min_size=n * n, max_size=n * n))
    im = draw(st.lists(finite, min_size=n * n, max_size=n * n))
    return (np.array(re) + 1j * np.array(im)).reshape(n, n)


@settings(max_examples=60, deadline=None)
@given(complex_matrices(4))
def test_eig_invariants_hypothesis(m):
    a = (m + m.conj().T) / 2
    e = linalg.eig_hermitian(a)
    assert np.max(np.abs(e.reconstruct() - a)) <= 1e-10
    v = e.eigenvectors
    assert np.max(np.abs(v.conj().T @ v - np.eye(4))) <= 1e-10


@settings(max_examples=60, deadline=None)
@given(complex_matrices(2), complex_matrices(2))
def test_kron_trace_factorises(a, b):
    assert abs(linalg.trace(linalg.kron(a, b)) - linalg.trace(a) * linalg.trace(b)) <= 1e-12 * max(
        1.0, abs(linalg.trace(a) * linalg.trace(b))
    ) * 10


@settings(max_examples=60, deadline=None)
@given(complex_matrices(4))
def test_partial_trace_preserves_trace(m):
    for keep in ("S", "A"):
        assert abs(linalg.trace(linalg.partial_trace(m, keep)) - linalg.trace(m)) <= 1e-12 * 20


@settings(max_examples=60, deadline=None)
@given(complex_matrices(2), complex_matrices(2))
def test_partial_trace_of_product(a, b):
    assert_allclose(linalg.partial_trace(linalg.kron(a, b), "S"), a * np.trace(b), atol=1e-12 * 100)


@settings(max_examples=60, deadline=None)
@given(complex_matrices(3), complex_matrices(3), complex_matrices(3))
def test_multiply_associative(a, b, c):
    left = linalg.multiply(linalg.multiply(a, b), c)
    right = linalg.multiply(a, linalg.multiply(b, c))
    assert np.max(np.abs(left - right)) <= 1e-10 * max(1.0, np.max(np.abs(left)))
