import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from ergolab import linalg
from ergolab.errors import DimensionError, ErgolabError
from ergolab.measurement import (
    MINUS,
    PLUS,
    ProjectorPair,
    WeakMeasurement,
    computational_total_projectors,
    measure_total,
    povm_elements,
    project_ancilla,
    weak_branch,
    weak_branches,
    weak_operators,
    weak_weights,
)
from ergolab.scenarios import random_projector_pair
from ergolab.states import (
    bell_diagonal,
    product_state,
    random_density,
    reduced_state,
    third_mixture,
    to_bloch,
)

TANH1 = math.tanh(1.0)


def test_weights_examples():
    assert weak_weights(0) == (0.5, 0.5)
    b0, b1 = weak_weights(1.0)
    assert b0 == pytest.approx((1 - TANH1) / 2)
    assert b1 == pytest.approx((1 + TANH1) / 2)
    assert weak_weights(-1.0) == pytest.approx((b1, b0))


def test_operator_limits(comp):
    plus, minus = weak_operators(WeakMeasurement(0, comp))
    assert_allclose(plus, np.eye(2) / math.sqrt(2))
    assert_allclose(minus, np.eye(2) / math.sqrt(2))
    plus, minus = weak_operators(WeakMeasurement(50, comp))
    assert np.max(np.abs(plus - comp.pi1)) < 1e-12
    assert np.max(np.abs(minus - comp.pi0)) < 1e-12


def test_plus_operator_at_one(comp):
    plus, _ = weak_operators(WeakMeasurement(1.0, comp))
    # |1> is the first basis vector, so P(+1) = diag(sqrt b1, sqrt b0)
    assert_allclose(plus, np.diag([0.9385078997951388, 0.3452577617116197]), atol=1e-14)


def test_povm_examples(comp):
    e_plus, e_minus = povm_elements(WeakMeasurement(0, comp))
    assert_allclose(e_plus, np.eye(2) / 2)
    assert_allclose(e_minus, np.eye(2) / 2)
    e_plus, e_minus = povm_elements(WeakMeasurement(50, comp))
    assert_allclose(e_plus, comp.pi1, atol=1e-12)
    assert_allclose(e_minus, comp.pi0, atol=1e-12)


def test_povm_from_operators():
    p = random_projector_pair(3)
    w = WeakMeasurement(0.7, p)
    for op, e in zip(weak_operators(w), povm_elements(w)):
        assert_allclose(op.conj().T @ op, e, atol=1e-14)


strengths = st.floats(0, 20, allow_nan=False)


@settings(max_examples=100, deadline=None)
@given(strengths, strengths, st.integers(0, 2**32))
def test_composition_and_commutation(x, y, seed):
    p = random_projector_pair(seed)
    px = weak_operators(WeakMeasurement(x, p))[0]
    py = weak_operators(WeakMeasurement(y, p))[0]
    pxy = weak_operators(WeakMeasurement(x + y, p))[0]
    prod = px @ py
    assert np.max(np.abs(prod - py @ px)) <= 1e-12
    # prod = k * pxy with k > 0
    k = np.trace(pxy.conj().T @ prod).real / np.trace(pxy.conj().T @ pxy).real
    assert k > 0
    assert np.max(np.abs(prod - k * pxy)) <= 1e-10


@settings(max_examples=100, deadline=None)
@given(st.floats(0, 60, allow_nan=False), st.integers(0, 2**32))
def test_povm_completeness(x, seed):
    e_plus, e_minus = povm_elements(WeakMeasurement(x, random_projector_pair(seed)))
    assert np.max(np.abs(e_plus + e_minus - np.eye(2))) <= 1e-12


def test_measurement_validation(comp):
    with pytest.raises(ErgolabError):
        WeakMeasurement(-1, comp)
    with pytest.raises(ErgolabError):
        WeakMeasurement(float("inf"), comp)
    with pytest.raises(ErgolabError):
        ProjectorPair(np.eye(2), np.zeros((2, 2)))
    with pytest.raises(ErgolabError):
        ProjectorPair(comp.pi1, comp.pi1)
    with pytest.raises(DimensionError):
        ProjectorPair(np.eye(4), np.eye(4))
    with pytest.raises(ValueError):
        weak_branch(third_mixture(), WeakMeasurement(1, comp), "0")


def test_product_state_conditionals(comp):
    rho_s = random_density(2, 5)
    rho = product_state(rho_s, random_density(2, 6))
    for br in project_ancilla(rho, random_projector_pair(9)):
        assert_allclose(br.conditional_state.matrix, rho_s.matrix, atol=1e-12)


def test_third_mixture_branches(comp):
    b0, b1 = project_ancilla(third_mixture(), comp)
    assert b0.probability == pytest.approx(1 / 3)
    assert b1.probability == pytest.approx(2 / 3)
    assert b0.conditional_state.purity() == pytest.approx(1)
    assert_allclose(b0.conditional_state.matrix, linalg.projector(linalg.KET1), atol=1e-15)
    assert_allclose(b1.conditional_state.matrix, np.eye(2) / 2, atol=1e-15)


def test_zero_probability_branch(comp):
    rho = product_state(random_density(2, 1), linalg.projector(linalg.KET1))
    b0, b1 = project_ancilla(rho, comp)
    assert not b0.present and b0.probability == 0
    assert b1.present and b1.probability == pytest.approx(1)


def test_weak_branch_examples(comp):
    rho = third_mixture()
    rho_s = reduced_state(rho)
    for sign in (PLUS, MINUS):
        br = weak_branch(rho, WeakMeasurement(0, comp), sign)
        assert br.probability == pytest.approx(0.5)
        assert_allclose(br.conditional_state.matrix, rho_s.matrix, atol=1e-14)
    strong = WeakMeasurement(50, comp)
    proj0, proj1 = project_ancilla(rho, comp)
    for sign, proj in ((PLUS, proj1), (MINUS, proj0)):
        br = weak_branch(rho, strong, sign)
        assert np.max(np.abs(br.conditional_state.matrix - proj.conditional_state.matrix)) < 1e-10
        assert br.probability == pytest.approx(proj.probability, abs=1e-10)


def test_weak_probabilities_third_mixture(comp):
    plus, minus = weak_branches(third_mixture(), WeakMeasurement(1.0, comp))
    # minus leans toward the pure branch
    assert minus.probability == pytest.approx((3 - TANH1) / 6, abs=1e-14)
    assert plus.probability == pytest.approx((3 + TANH1) / 6, abs=1e-14)
    assert minus.probability == pytest.approx(0.3730676406740392, abs=1e-15)


@pytest.mark.parametrize("seed", range(40))
def test_weak_branch_consistency(seed):
    rho = random_density(4, seed)
    p = random_projector_pair(seed + 1000)
    x = [0.0, 0.1, 0.5, 1.0, 2.0, 5.0][seed % 6]
    w = WeakMeasurement(x, p)
    plus, minus = weak_branches(rho, w)
    assert plus.probability + minus.probability == pytest.approx(1, abs=1e-12)
    mix = plus.probability * plus.conditional_state.matrix + minus.probability * minus.conditional_state.matrix
    assert np.max(np.abs(mix - reduced_state(rho).matrix)) <= 1e-12
    proj = project_ancilla(rho, p)
    for br in (plus, minus):
        weights = w.weights(br.label)
        assert br.probability == pytest.approx(sum(weights[b.label] * b.probability for b in proj), abs=1e-12)


def test_operator_route_matches_mixture_for_computational(comp):
    for seed in range(20):
        rho = random_density(4, seed)
        w = WeakMeasurement(0.8, comp)
        proj = project_ancilla(rho, comp)
        for br in weak_branches(rho, w):
            weights = w.weights(br.label)
            blended = sum(weights[b.label] * b.probability * b.conditional_state.matrix for b in proj)
            assert_allclose(br.probability * br.conditional_state.matrix, blended, atol=1e-12)


def test_bell_conditionals(comp):
    c3 = 0.6
    b0, b1 = project_ancilla(bell_diagonal((0.2, -0.3, c3)), comp)
    assert b0.probability == pytest.approx(0.5)
    assert b1.probability == pytest.approx(0.5)
    assert_allclose(b1.conditional_state.matrix, np.diag([1 + c3, 1 - c3]) / 2, atol=1e-15)
    assert_allclose(b0.conditional_state.matrix, np.diag([1 - c3, 1 + c3]) / 2, atol=1e-15)


def test_measure_total_examples():
    c3 = -0.4
    probs = {b.label: b.probability for b in measure_total(bell_diagonal((0.1, 0.3, c3)))}
    assert probs["11"] == pytest.approx((1 + c3) / 4)
    assert probs["00"] == pytest.approx((1 + c3) / 4)
    assert probs["10"] == pytest.approx((1 - c3) / 4)
    assert probs["01"] == pytest.approx((1 - c3) / 4)
    for br in measure_total(np.eye(4) / 4):
        assert br.probability == pytest.approx(0.25)
        assert_allclose(br.conditional_state.matrix, computational_total_projectors()[br.label])


@pytest.mark.parametrize("seed", range(20))
def test_measure_total_bloch_probabilities(seed):
    rho = random_density(4, seed)
    b = to_bloch(rho)
    s3, r3, t33 = b.s[2], b.r[2], b.t[2, 2]
    expect = {
        "11": 1 + s3 + r3 + t33,
        "10": 1 + s3 - r3 - t33,
        "01": 1 - s3 + r3 - t33,
        "00": 1 - s3 - r3 + t33,
    }
    for br in measure_total(rho):
        assert br.probability == pytest.approx(expect[br.label] / 4, abs=1e-12)


def test_measure_total_rejects_bad_sets():
    good = computational_total_projectors()
    bad = dict(good)
    bad["00"] = good["11"]
    with pytest.raises(ErgolabError):
        measure_total(np.eye(4) / 4, bad)
    incomplete = dict(good)
    del incomplete["00"]
    with pytest.raises(DimensionError):
        measure_total(np.eye(4) / 4, incomplete)
    with pytest.raises(DimensionError):
        measure_total(np.eye(2) / 2)
