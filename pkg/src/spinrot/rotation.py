"""Rotation operators for spin 1/2 under two sign conventions.

``TEXTBOOK_LEFT`` acts on spinors with ``U = E cos(phi/2) - i (sigma.n) sin(phi/2)``
and ``PAPER_RIGHT`` with its adjoint ``U+ = E cos(phi/2) + i (sigma.n) sin(phi/2)``.

Handedness is measured with :func:`rodrigues`, the right-screw frame
rotation whose z-axis form is::

    [[ cos, sin, 0],
     [-sin, cos, 0],
     [   0,   0, 1]]

In that frame the adjoint action of ``PAPER_RIGHT`` is ``rodrigues(n, phi)``
and that of ``TEXTBOOK_LEFT`` is ``rodrigues(n, -phi)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .su2 import (
    TOL_ALG,
    NotSpecialUnitary,
    NotUnitary,
    _frozen,
    as_axis,
    eigenspinors,
    is_special_unitary,
    is_unitary,
    max_abs_diff,
    outer,
    paulis,
    sigma_along,
)

__all__ = [
    "RotationConvention", "AxisAngle", "EulerZYZ", "EulerMode", "Handedness",
    "AuditReport", "AmbiguousAxis", "u_z", "rotation_operator", "rotate_spinor",
    "conjugate_pauli", "adjoint_so3", "rodrigues", "audit_convention",
    "compose_euler", "lemma2_check", "pauli_transport_duality",
    "canonical_axis",
]

TWO_PI = 2 * math.pi
SO3_MATCH_TOL = 1e-9


class AmbiguousAxis(ValueError):
    """The rotation angle is too small for the axis to be defined."""


class RotationConvention(enum.Enum):
    TEXTBOOK_LEFT = "left"
    PAPER_RIGHT = "right"

    @property
    def sign(self) -> int:
        # sign in front of i (sigma.n) sin(phi/2)
        return 1 if self is RotationConvention.PAPER_RIGHT else -1

    @classmethod
    def parse(cls, text: str) -> "RotationConvention":
        return cls(text.lower())


@dataclass(frozen=True)
class AxisAngle:
    axis: np.ndarray
    angle: float

    def __post_init__(self):
        object.__setattr__(self, "axis", as_axis(self.axis))
        object.__setattr__(self, "angle", float(self.angle))

    @property
    def reduced_angle(self) -> float:
        """Angle folded into (-2 pi, 2 pi]; the operator is 4 pi periodic."""
        a = math.remainder(self.angle, 2 * TWO_PI)
        return TWO_PI if a == -TWO_PI else a


def u_z(phi: float) -> np.ndarray:
    """``diag(e^{-i phi/2}, e^{+i phi/2})``, the "+" branch of the z solution."""
    return _frozen(np.array([[complex(math.cos(phi / 2), -math.sin(phi / 2)), 0],
                             [0, complex(math.cos(phi / 2), math.sin(phi / 2))]]))


def rotation_operator(aa: AxisAngle, conv: RotationConvention) -> np.ndarray:
    """SU(2) element for ``aa`` under ``conv``.

    Both conventions are evaluated from the same cos/sin pair, so the two
    results are adjoints of each other bit for bit.
    """
    x, y, z = aa.axis
    half = aa.reduced_angle / 2
    c = math.cos(half)
    s = conv.sign * math.sin(half)
    return _frozen(np.array([
        [complex(c, s * z), complex(s * y, s * x)],
        [complex(-s * y, s * x), complex(c, -s * z)],
    ]))


def rotate_spinor(s, aa: AxisAngle, conv: RotationConvention) -> np.ndarray:
    return _frozen(rotation_operator(aa, conv) @ np.asarray(s))


def conjugate_pauli(m, aa: AxisAngle, conv: RotationConvention) -> np.ndarray:
    """``W m W+`` with ``W = rotation_operator(aa, conv)``."""
    w = rotation_operator(aa, conv)
    return _frozen(w @ np.asarray(m) @ w.conj().T)


def adjoint_so3(w) -> np.ndarray:
    """The 3x3 rotation ``R`` with ``W sigma_k W+ = sum_j R[j, k] sigma_j``."""
    w = np.asarray(w)
    if not is_special_unitary(w):
        raise NotSpecialUnitary("adjoint_so3 needs a special unitary matrix")
    sig = paulis()
    wh = w.conj().T
    r = np.empty((3, 3))
    for k in range(3):
        rotated = w @ sig[k] @ wh
        for j in range(3):
            r[j, k] = 0.5 * np.trace(sig[j] @ rotated).real
    return _frozen(r)


def _cross_matrix(n) -> np.ndarray:
    x, y, z = n
    return np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])


def rodrigues(aa: AxisAngle) -> np.ndarray:
    """Right-screw frame rotation about ``aa.axis`` by ``aa.angle``.

    ``I cos + (1 - cos) n n^T - sin [n]x``; for the z axis this is the
    coordinate-transition matrix with rows ``(cos, sin, 0)``,
    ``(-sin, cos, 0)``, ``(0, 0, 1)``. It equals the usual active
    (counter-clockwise) rotation matrix by ``-angle``.
    """
    n = aa.axis
    c, s = math.cos(aa.angle), math.sin(aa.angle)
    r = c * np.eye(3) + (1 - c) * np.outer(n, n) - s * _cross_matrix(n)
    return _frozen(r)


class Handedness(enum.Enum):
    RIGHT_SCREW = "right"
    LEFT_SCREW = "left"
    IDENTITY = "identity"


@dataclass(frozen=True)
class AuditReport:
    handedness: Handedness
    axis: np.ndarray
    angle: float
    tie_break: bool = False
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "handedness": self.handedness.value,
            "axis": [float(v) for v in self.axis],
            "angle": float(self.angle),
            "tie_break": self.tie_break,
            "note": self.note,
        }


def canonical_axis(n) -> np.ndarray:
    """Orient ``n`` into the half-space z > 0 (ties: y > 0, then x > 0)."""
    n = np.asarray(n, dtype=np.float64)
    for k in (2, 1, 0):
        if abs(n[k]) > TOL_ALG:
            return _frozen(n if n[k] > 0 else -n)
    return _frozen(n)


def audit_convention(w, reference_axis=None, strict: bool = False) -> AuditReport:
    """Classify the screw sense of the special unitary ``w``.

    The axis and angle in [0, pi] come from the trace and the traceless part
    of ``+-w``. The axis is oriented along ``reference_axis`` when given,
    otherwise into the canonical half-space of :func:`canonical_axis`, and
    handedness is decided by matching ``adjoint_so3(w)`` against
    ``rodrigues(axis, +angle)`` and ``rodrigues(axis, -angle)``. At
    ``angle == pi`` both match and ``RIGHT_SCREW`` is returned with
    ``tie_break`` set.
    """
    w = np.asarray(w)
    if not is_special_unitary(w):
        raise NotSpecialUnitary("audit_convention needs a special unitary matrix")
    sig = paulis()
    a0 = 0.5 * np.trace(w).real
    v = np.array([0.5 * np.trace(s @ w).imag for s in sig])
    if a0 < 0:
        a0, v = -a0, -v
    vn = float(np.linalg.norm(v))
    angle = 2 * math.atan2(vn, a0)
    if angle < 1e-9:
        if strict:
            raise AmbiguousAxis("rotation angle below 1e-9, axis undefined")
        return AuditReport(Handedness.IDENTITY, _frozen(np.array([0.0, 0.0, 1.0])),
                           0.0, note="identity: axis reported as +z by convention")
    axis = v / vn
    if reference_axis is not None:
        ref = as_axis(reference_axis)
        if axis @ ref < 0:
            axis = -axis
    else:
        axis = canonical_axis(axis)
    axis = as_axis(axis)

    r = adjoint_so3(w)
    d_right = max_abs_diff(r, rodrigues(AxisAngle(axis, angle)))
    d_left = max_abs_diff(r, rodrigues(AxisAngle(axis, -angle)))
    if d_right <= SO3_MATCH_TOL and d_left <= SO3_MATCH_TOL:
        return AuditReport(Handedness.RIGHT_SCREW, axis, angle, tie_break=True,
                           note="half-turn: both screw senses coincide, right chosen")
    if d_right <= SO3_MATCH_TOL:
        return AuditReport(Handedness.RIGHT_SCREW, axis, angle)
    if d_left <= SO3_MATCH_TOL:
        return AuditReport(Handedness.LEFT_SCREW, axis, angle)
    raise ArithmeticError(f"no Rodrigues match (right {d_right:.3e}, left {d_left:.3e})")


# Euler sequences ----------------------------------------------------------

class EulerMode(enum.Enum):
    INTRINSIC_ZYZ = "intrinsic"
    EXTRINSIC_ZYZ = "extrinsic"


_Z = np.array([0.0, 0.0, 1.0])
_Y = np.array([0.0, 1.0, 0.0])


@dataclass(frozen=True)
class EulerZYZ:
    alpha: float
    beta: float
    gamma: float

    def canonical(self, conv: RotationConvention = RotationConvention.PAPER_RIGHT,
                  ) -> "EulerZYZ":
        """Equivalent angles with beta in [0, pi] and alpha, gamma in [0, 2 pi).

        Extracted from the extrinsic operator, so the result composes to the
        same rotation (up to the SU(2) sign). At gimbal lock gamma is folded
        into alpha and reported as 0.
        """
        w = compose_euler(self, EulerMode.EXTRINSIC_ZYZ, conv)
        # right-convention form: [[c e^{i(g+a)/2}, s e^{i(g-a)/2}], ...]
        c, s = abs(w[0, 0]), abs(w[0, 1])
        if s <= 1e-12:
            alpha, beta, gamma = 2 * np.angle(w[0, 0]), 0.0, 0.0
        elif c <= 1e-12:
            alpha, beta, gamma = -2 * np.angle(w[0, 1]), math.pi, 0.0
        else:
            total, diff = 2 * np.angle(w[0, 0]), 2 * np.angle(w[0, 1])
            alpha, beta, gamma = (total - diff) / 2, 2 * math.atan2(s, c), (total + diff) / 2
        if conv is RotationConvention.TEXTBOOK_LEFT:
            # textbook angles are the negated right-convention ones; restore beta >= 0
            # with (a, -b, g) ~ (a + pi, b, g + pi)
            if beta in (0.0, math.pi):
                alpha = -alpha
            else:
                alpha, gamma = math.pi - alpha, math.pi - gamma
        return EulerZYZ(float(alpha) % TWO_PI, float(beta), float(gamma) % TWO_PI)


def compose_euler(e: EulerZYZ, mode: EulerMode, conv: RotationConvention) -> np.ndarray:
    """Operator for the z-y-z sequence ``alpha``, ``beta``, ``gamma``.

    EXTRINSIC turns about the fixed axes z, y, z (``W_z(g) W_y(b) W_z(a)``).
    INTRINSIC turns about z, then the carried-along y', then z''; the body
    axes are obtained from the convention's own adjoint action.
    """
    if mode is EulerMode.EXTRINSIC_ZYZ:
        w1 = rotation_operator(AxisAngle(_Z, e.alpha), conv)
        w2 = rotation_operator(AxisAngle(_Y, e.beta), conv)
        w3 = rotation_operator(AxisAngle(_Z, e.gamma), conv)
        return _frozen(w3 @ w2 @ w1)
    w1 = rotation_operator(AxisAngle(_Z, e.alpha), conv)
    y1 = adjoint_so3(w1) @ _Y
    w2 = rotation_operator(AxisAngle(y1, e.beta), conv)
    z2 = adjoint_so3(w2 @ w1) @ _Z
    w3 = rotation_operator(AxisAngle(z2, e.gamma), conv)
    return _frozen(w3 @ w2 @ w1)


# executable identities ----------------------------------------------------

def lemma2_check(u, r, tol: float = TOL_ALG) -> bool:
    """``u sigma_r u+`` equals the projector difference of the moved eigenspinors."""
    u = np.asarray(u)
    if not is_unitary(u):
        raise NotUnitary("lemma2_check needs a unitary matrix")
    plus, minus = eigenspinors(r)
    up, um = u @ plus, u @ minus
    lhs = u @ sigma_along(r) @ u.conj().T
    rhs = outer(up, up) - outer(um, um)
    return max_abs_diff(lhs, rhs) <= tol


def pauli_transport_duality(a, r, tol: float = TOL_ALG) -> bool:
    """``(A sigma) . r == sigma . (A^T r)`` for a 3x3 rotation ``a``."""
    a = np.asarray(a, dtype=np.float64)
    r = as_axis(r)
    sig = np.array(paulis())
    moved = np.einsum("jk,kab->jab", a, sig)
    lhs = np.einsum("j,jab->ab", r, moved)
    rhs = sigma_along(a.T @ r)
    return max_abs_diff(lhs, rhs) <= tol


def is_rotation3(r, tol: float = TOL_ALG) -> bool:
    r = np.asarray(r)
    return (float(np.max(np.abs(r.T @ r - np.eye(3)))) <= tol
            and abs(np.linalg.det(r) - 1) <= tol)
