"""Bloch-sphere coordinates and Pauli frames related by a rotation.

A single spherical convention is used: zenith ``theta`` from +z and azimuth
``phi`` from +x. The alternative form
``cos(t/2) (1, 0) - e^{ip} sin(t/2) (0, 1)`` counts its angle the other
way round, which :func:`spinor_from_bloch` accounts for by passing ``-theta``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .rotation import AxisAngle, RotationConvention, rotation_operator
from .su2 import (
    TOL_ALG,
    SphericalDirection,
    ZeroSpinor,
    _frozen,
    allclose_up_to_sign,
    as_axis,
    identity2,
    inner,
    max_abs_diff,
    paulis,
    sigma_along,
)

UP = np.array([1, 0], dtype=np.complex128)


def spinor_from_bloch_angles(theta: float, phi: float) -> np.ndarray:
    """``(cos(theta/2), -e^{i phi} sin(theta/2))`` with the inverse angle count."""
    return _frozen(np.array([math.cos(theta / 2),
                             -complex(math.cos(phi), math.sin(phi)) * math.sin(theta / 2)]))


def spinor_from_bloch(p) -> np.ndarray:
    """Spin-up-along-``p`` state written in the z basis."""
    d = SphericalDirection.from_axis(p)
    return spinor_from_bloch_angles(-d.theta, d.phi)


def bloch_point(s) -> np.ndarray:
    """Pauli expectation values ``(<sx>, <sy>, <sz>)`` of the spinor ``s``."""
    s = np.asarray(s, dtype=np.complex128)
    n2 = float(np.vdot(s, s).real)
    if n2 < 0.25:
        raise ZeroSpinor("bloch_point needs a normalised spinor")
    a, b = s
    cross = np.conj(a) * b
    v = np.array([2 * cross.real, 2 * cross.imag, abs(a) ** 2 - abs(b) ** 2]) / n2
    return _frozen(v)


@dataclass(frozen=True, eq=False)
class Frame:
    """A per-particle Pauli frame ``sigma1_k = T sigma_k T+``."""

    transport: np.ndarray

    @property
    def paulis(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        t = self.transport
        th = t.conj().T
        return tuple(_frozen(t @ s @ th) for s in paulis())

    def __eq__(self, other):
        if not isinstance(other, Frame):
            return NotImplemented
        # transports that differ by sign describe the same frame
        return allclose_up_to_sign(self.transport, other.transport)

    __hash__ = None


def make_frame(t_axis, theta: float) -> Frame:
    """Frame turned about ``t_axis`` by ``E cos(theta/2) - i sigma_t sin(theta/2)``."""
    return Frame(rotation_operator(AxisAngle(t_axis, theta),
                                   RotationConvention.TEXTBOOK_LEFT))


def frame_sigma_dot(f: Frame, q) -> np.ndarray:
    t = f.transport
    return _frozen(t @ sigma_along(q) @ t.conj().T)


def lemma3_check(f: Frame, q, theta: float, tol: float = TOL_ALG) -> bool:
    """Overlap of a frame-up spinor with its rotated self is frame independent.

    Compares ``<n|U+_q|n>`` built from the frame's Pauli operator with
    ``<z|R+_q|z>`` built from the global one, where ``z = T+ n``.
    """
    q = as_axis(q)
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    e = identity2()
    u_plus = c * e + 1j * s * frame_sigma_dot(f, q)
    r_plus = c * e + 1j * s * sigma_along(q)
    chi_n = UP
    chi_z = f.transport.conj().T @ chi_n
    lhs = inner(chi_n, u_plus @ chi_n)
    rhs = inner(chi_z, r_plus @ chi_z)
    return abs(lhs - rhs) <= tol


def frame_components_dot(f: Frame, q) -> np.ndarray:
    """``sum_k q_k sigma1_k``; the component form of :func:`frame_sigma_dot`."""
    q = as_axis(q)
    return _frozen(sum(qk * s for qk, s in zip(q, f.paulis)))


def is_special_unitary_frame(f: Frame) -> bool:
    t = f.transport
    return (max_abs_diff(t @ t.conj().T, np.eye(2)) <= TOL_ALG
            and abs(np.linalg.det(t) - 1) <= TOL_ALG)
