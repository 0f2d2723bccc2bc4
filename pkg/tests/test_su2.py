import math

import numpy as np
import pytest
from hypothesis import given, settings

from helpers import axes, phases, random_axis, spinors
from spinrot.su2 import (
    DOWN,
    TOL_ALG,
    UP,
    NonUnitAxis,
    SphericalDirection,
    adjoint,
    canonical_phase,
    det,
    eigenspinors,
    identity2,
    inner,
    is_hermitian,
    is_unitary,
    matmul,
    max_abs_diff,
    outer,
    pauli_x,
    pauli_y,
    pauli_z,
    projector_decomposition,
    sigma_along,
    spinor,
    state_equal,
    tensor_pauli_basis,
    trace,
)

SQ2 = 1 / math.sqrt(2)


def test_pauli_literals():
    assert np.array_equal(pauli_z(), [[1, 0], [0, -1]])
    assert np.array_equal(pauli_y(), [[0, -1j], [1j, 0]])
    assert np.array_equal(pauli_x() @ pauli_x(), identity2())


def test_outputs_are_read_only():
    with pytest.raises(ValueError):
        pauli_x()[0, 0] = 5


def test_plumbing_examples():
    assert np.array_equal(matmul(pauli_z(), pauli_x()), 1j * pauli_y())
    assert np.array_equal(adjoint(pauli_y()), pauli_y())
    assert det(pauli_x()) == -1


@pytest.mark.parametrize("a, b, c", [(0, 1, 2), (1, 2, 0), (2, 0, 1)])
def test_commutation_table(a, b, c):
    s = [pauli_x(), pauli_y(), pauli_z()]
    # sigma_a sigma_b = i sigma_c for cyclic (a, b, c); z x = i y is the (2, 0, 1) row
    assert np.array_equal(s[a] @ s[b], 1j * s[c])
    assert np.array_equal(s[a] @ s[b] + s[b] @ s[a], np.zeros((2, 2)))


def test_sigma_along_named_axes():
    assert max_abs_diff(sigma_along([0, 0, 1]), pauli_z()) == 0
    assert max_abs_diff(sigma_along([1, 0, 0]), pauli_x()) == 0


@pytest.mark.parametrize("theta, phi", [(0.3, 1.1), (2.0, 5.5), (math.pi / 2, 0.0), (3.0, 3.0)])
def test_sigma_along_half_angle_form(theta, phi):
    r = [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
    expected = [[math.cos(theta), np.exp(-1j * phi) * math.sin(theta)],
                [np.exp(1j * phi) * math.sin(theta), -math.cos(theta)]]
    assert max_abs_diff(sigma_along(r), expected) <= TOL_ALG


def test_sigma_along_rejects_non_unit_axis():
    with pytest.raises(NonUnitAxis):
        sigma_along([1, 1, 0])
    # within TOL_AXIS is accepted
    sigma_along([1 + 1e-10, 0, 0])


@settings(max_examples=200)
@given(axes)
def test_sigma_along_properties(r):
    s = sigma_along(r)
    assert is_hermitian(s) and is_unitary(s)
    assert abs(trace(s)) <= TOL_ALG
    assert abs(det(s) + 1) <= TOL_ALG
    assert max_abs_diff(s @ s, np.eye(2)) <= TOL_ALG


def test_eigenspinor_examples():
    plus, minus = eigenspinors([0, 0, 1])
    assert state_equal(plus, UP) and state_equal(minus, DOWN)
    assert max_abs_diff(eigenspinors([1, 0, 0])[0], [SQ2, SQ2]) <= TOL_ALG
    assert max_abs_diff(eigenspinors([0, 1, 0])[0], [SQ2, 1j * SQ2]) <= TOL_ALG


@settings(max_examples=200)
@given(axes)
def test_eigenspinors_orthonormal_and_eigen(r):
    plus, minus = eigenspinors(r)
    s = sigma_along(r)
    assert abs(np.linalg.norm(plus) - 1) <= TOL_ALG
    assert abs(np.linalg.norm(minus) - 1) <= TOL_ALG
    assert abs(inner(minus, plus)) <= TOL_ALG
    assert max_abs_diff(s @ plus, plus) <= TOL_ALG
    assert max_abs_diff(s @ minus, -minus) <= TOL_ALG


def test_up_down_from_eigenspinor_combinations(rng):
    for _ in range(100):
        theta, phi = rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)
        r = [math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi), math.cos(theta)]
        plus, minus = eigenspinors(r)
        c, s = math.cos(theta / 2), math.sin(theta / 2)
        assert state_equal(c * plus - s * minus, UP)
        assert state_equal(s * plus + c * minus, DOWN)


def test_projector_examples():
    p_plus, p_minus = projector_decomposition([0, 0, 1])
    assert np.array_equal(p_plus, [[1, 0], [0, 0]])
    # direct outer products of (1, 1)/sqrt2 and (-1, 1)/sqrt2
    a, b = np.array([SQ2, SQ2]), np.array([-SQ2, SQ2])
    oracle = np.outer(a, a.conj()) - np.outer(b, b.conj())
    p_plus, p_minus = projector_decomposition([1, 0, 0])
    assert max_abs_diff(p_plus - p_minus, oracle) <= TOL_ALG
    assert max_abs_diff(oracle, pauli_x()) <= TOL_ALG


def test_projectors_rebuild_sigma(rng):
    for _ in range(100):
        r = random_axis(rng)
        p_plus, p_minus = projector_decomposition(r)
        assert max_abs_diff(p_plus - p_minus, sigma_along(r)) <= TOL_ALG
        assert max_abs_diff(p_plus + p_minus, np.eye(2)) <= TOL_ALG


def test_tensor_basis_exact():
    sx, isy, sz, e = tensor_pauli_basis()
    assert np.array_equal(outer(UP, DOWN) + outer(DOWN, UP), pauli_x())
    assert np.array_equal(outer(UP, DOWN) - outer(DOWN, UP), 1j * pauli_y())
    assert np.array_equal(outer(UP, UP) + outer(DOWN, DOWN), identity2())
    for built, ref in [(sx, pauli_x()), (isy, 1j * pauli_y()), (sz, pauli_z()), (e, identity2())]:
        assert max_abs_diff(built, ref) == 0.0


@pytest.mark.parametrize("theta, phi", [(0.7, 0.2), (1.5, 6.0), (3.1, 4.0), (0.0, 0.0), (math.pi, 0.0)])
def test_spherical_round_trip(theta, phi):
    d = SphericalDirection.from_axis(SphericalDirection(theta, phi).to_axis())
    assert abs(d.theta - theta) <= TOL_ALG
    assert abs(d.phi - phi) <= TOL_ALG


def test_poles_canonicalise_azimuth():
    assert SphericalDirection.from_axis([0, 0, 1]) == SphericalDirection(0.0, 0.0)
    assert SphericalDirection.from_axis([0, 0, -1]) == SphericalDirection(math.pi, 0.0)
    d = SphericalDirection.from_axis(SphericalDirection(math.pi, 2.0).to_axis())
    assert d.phi == 0.0


@given(spinors, phases)
def test_canonical_phase_removes_global_phase(s, alpha):
    a = canonical_phase(s)
    b = canonical_phase(np.exp(1j * alpha) * s)
    assert max_abs_diff(a, b) <= 1e-12
    k = int(np.argmax(np.abs(a) > 0.5 * np.abs(a).max()))
    assert a[k].imag == 0 and a[k].real >= 0


def test_spinor_normalises():
    s = spinor(3, 4j)
    assert abs(np.linalg.norm(s) - 1) <= TOL_ALG
