"""Spin-1/2 linear algebra on 2x2 complex matrices.

Spinors are length-2 ``complex128`` arrays, operators are ``(2, 2)``
``complex128`` arrays and axes are unit ``float64`` 3-vectors. Everything
returned from this module is read-only so values can be shared freely.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

TOL_ALG = 1e-12
TOL_AXIS = 1e-9


class NonUnitAxis(ValueError):
    """Raised when a rotation or measurement axis is not of unit length."""


class ZeroSpinor(ValueError):
    """Raised when a spinor is too small to represent a state."""


class NotUnitary(ValueError):
    pass


class NotSpecialUnitary(NotUnitary):
    pass


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _mat(rows) -> np.ndarray:
    return _frozen(np.array(rows, dtype=np.complex128))


def pauli_x() -> np.ndarray:
    return _mat([[0, 1], [1, 0]])


def pauli_y() -> np.ndarray:
    return _mat([[0, -1j], [1j, 0]])


def pauli_z() -> np.ndarray:
    return _mat([[1, 0], [0, -1]])


def identity2() -> np.ndarray:
    return _mat([[1, 0], [0, 1]])


def paulis() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """The Pauli vector as a tuple ``(sx, sy, sz)``."""
    return pauli_x(), pauli_y(), pauli_z()


UP = _frozen(np.array([1, 0], dtype=np.complex128))
DOWN = _frozen(np.array([0, 1], dtype=np.complex128))


# plumbing -----------------------------------------------------------------

def matmul(a, b) -> np.ndarray:
    return _frozen(np.asarray(a) @ np.asarray(b))


def adjoint(m) -> np.ndarray:
    return _frozen(np.conj(np.asarray(m)).T.copy())


def apply(m, s) -> np.ndarray:
    """``m @ s`` without renormalising the result."""
    return _frozen(np.asarray(m) @ np.asarray(s))


def trace(m) -> complex:
    return complex(np.trace(m))


def det(m) -> complex:
    m = np.asarray(m)
    return complex(m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0])


def scale(m, c: complex) -> np.ndarray:
    return _frozen(np.asarray(m) * c)


def add(a, b) -> np.ndarray:
    return _frozen(np.asarray(a) + np.asarray(b))


def outer(a, b) -> np.ndarray:
    """Rank-one matrix ``a (x) b^+``."""
    return _frozen(np.outer(a, np.conj(b)))


def inner(a, b) -> complex:
    """``<a|b>``, conjugating the left argument."""
    return complex(np.vdot(a, b))


def is_hermitian(m, tol: float = TOL_ALG) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m - m.conj().T)) <= tol)


def is_unitary(m, tol: float = TOL_ALG) -> bool:
    m = np.asarray(m)
    return bool(np.max(np.abs(m @ m.conj().T - np.eye(2))) <= tol)


def is_special_unitary(m, tol: float = TOL_ALG) -> bool:
    return is_unitary(m, tol) and abs(det(m) - 1) <= tol


def max_abs_diff(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


def allclose_up_to_sign(a, b, tol: float = TOL_ALG) -> bool:
    """Matrix equality modulo the SU(2) double cover (``a == +-b``)."""
    return min(max_abs_diff(a, b), max_abs_diff(a, -np.asarray(b))) <= tol


# spinors ------------------------------------------------------------------

def spinor(up: complex, down: complex) -> np.ndarray:
    """Normalised spinor from two raw amplitudes."""
    s = np.array([up, down], dtype=np.complex128)
    n = np.linalg.norm(s)
    if n < 1e-12:
        raise ZeroSpinor("spinor has zero norm")
    return _frozen(s / n)


def norm(s) -> float:
    return float(np.linalg.norm(s))


def state_equal(a, b, tol: float = TOL_ALG) -> bool:
    """True when ``a`` and ``b`` describe the same state (|<a|b>| = 1)."""
    return abs(abs(inner(a, b)) - 1.0) <= tol


def canonical_phase(s) -> np.ndarray:
    """Remove the global phase of ``s``.

    The first component whose modulus exceeds half the largest modulus is
    made real and non-negative.
    """
    s = np.asarray(s, dtype=np.complex128)
    mods = np.abs(s)
    if mods.max() == 0:
        raise ZeroSpinor("spinor has zero norm")
    k = int(np.argmax(mods > 0.5 * mods.max()))
    out = s * (abs(s[k]) / s[k])
    out[k] = mods[k]
    return _frozen(out)


# axes ---------------------------------------------------------------------

def as_axis(v, tol: float = TOL_AXIS) -> np.ndarray:
    """Validate ``v`` as a unit 3-vector and return it renormalised.

    Raises :class:`NonUnitAxis` when the length is off by more than ``tol``.
    """
    a = np.asarray(v, dtype=np.float64).reshape(3)
    n = float(np.linalg.norm(a))
    if not abs(n - 1.0) <= tol:
        raise NonUnitAxis(f"axis {a.tolist()} has length {n!r}")
    return _frozen(a / n)


@dataclass(frozen=True)
class SphericalDirection:
    """Zenith ``theta`` from +z in [0, pi] and azimuth ``phi`` in [0, 2 pi)."""

    theta: float
    phi: float

    def to_axis(self) -> np.ndarray:
        st = math.sin(self.theta)
        return _frozen(np.array([st * math.cos(self.phi), st * math.sin(self.phi),
                                 math.cos(self.theta)]))

    @classmethod
    def from_axis(cls, r) -> "SphericalDirection":
        x, y, z = as_axis(r)
        rho = math.hypot(x, y)
        theta = math.atan2(rho, z)
        if rho <= TOL_ALG:
            # azimuth is undefined at the poles
            return cls(0.0 if z > 0 else math.pi, 0.0)
        phi = math.atan2(y, x) % (2 * math.pi)
        if phi >= 2 * math.pi:
            phi = 0.0
        return cls(theta, phi)


def axis_from_angles(theta: float, phi: float) -> np.ndarray:
    return SphericalDirection(theta, phi).to_axis()


# direction-dependent Pauli operators --------------------------------------

def sigma_along(r) -> np.ndarray:
    """Projection of the Pauli vector on the unit direction ``r``."""
    x, y, z = as_axis(r)
    return _mat([[z, x - 1j * y], [x + 1j * y, -z]])


def eigenspinors(r) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvectors of ``sigma_along(r)`` with eigenvalues +1 and -1.

    Uses the half-angle form in the spherical angles of ``r``::

        plus  = ( cos t/2,  e^{ip} sin t/2)
        minus = (-sin t/2,  e^{ip} cos t/2)
    """
    d = SphericalDirection.from_axis(r)
    c, s = math.cos(d.theta / 2), math.sin(d.theta / 2)
    ph = complex(math.cos(d.phi), math.sin(d.phi))
    plus = _frozen(np.array([c, ph * s], dtype=np.complex128))
    minus = _frozen(np.array([-s, ph * c], dtype=np.complex128))
    return plus, minus


def projector_decomposition(r) -> tuple[np.ndarray, np.ndarray]:
    plus, minus = eigenspinors(r)
    return outer(plus, plus), outer(minus, minus)


def tensor_pauli_basis() -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Build ``(sx, i*sy, sz, E)`` from outer products of the z basis.

    Construction is exact in floating point; a mismatch with the literal
    matrices raises ``AssertionError``.
    """
    uu, ud = outer(UP, UP), outer(UP, DOWN)
    du, dd = outer(DOWN, UP), outer(DOWN, DOWN)
    sx, isy, sz, e = add(ud, du), add(ud, -du), add(uu, -dd), add(uu, dd)
    assert np.array_equal(sx, pauli_x())
    assert np.array_equal(isy, 1j * pauli_y())
    assert np.array_equal(sz, pauli_z())
    assert np.array_equal(e, identity2())
    return sx, isy, sz, e
