"""Analytic Stern-Gerlach measurement: amplitudes, probabilities, collapse."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .su2 import (
    TOL_ALG,
    ZeroSpinor,
    as_axis,
    canonical_phase,
    eigenspinors,
    inner,
    spinor,
    state_equal,
)

BRANCH_THRESHOLD = 1e-12


class ImpossibleBranch(ValueError):
    pass


class Branch(enum.Enum):
    PLUS = "+"
    MINUS = "-"


@dataclass(frozen=True)
class DeviceOrientation:
    axis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "axis", as_axis(self.axis))


@dataclass(frozen=True)
class MeasurementResult:
    amp_plus: complex
    amp_minus: complex
    p_plus: float
    p_minus: float

    def as_dict(self) -> dict:
        return {
            "amp_plus": [self.amp_plus.real, self.amp_plus.imag],
            "amp_minus": [self.amp_minus.real, self.amp_minus.imag],
            "p_plus": self.p_plus,
            "p_minus": self.p_minus,
        }


def _check_state(s) -> np.ndarray:
    s = np.asarray(s, dtype=np.complex128)
    if np.linalg.norm(s) < 0.5:
        raise ZeroSpinor("measured spinor is not normalised")
    return s


def project(s, d: DeviceOrientation, gauge: complex = 1.0) -> MeasurementResult:
    """Amplitudes ``<chi(+-)|s>`` along the device axis.

    ``gauge`` multiplies both eigenspinors by a phase; probabilities do not
    depend on it.
    """
    s = _check_state(s)
    plus, minus = eigenspinors(d.axis)
    ap = inner(gauge * plus, s)
    am = inner(gauge * minus, s)
    return MeasurementResult(ap, am, abs(ap) ** 2, abs(am) ** 2)


def collapse(s, d: DeviceOrientation, branch: Branch) -> np.ndarray:
    """Post-measurement state for ``branch``, in canonical phase."""
    res = project(s, d)
    p = res.p_plus if branch is Branch.PLUS else res.p_minus
    if p <= BRANCH_THRESHOLD:
        raise ImpossibleBranch(f"branch {branch.value} has probability {p:.3e}")
    plus, minus = eigenspinors(d.axis)
    return canonical_phase(plus if branch is Branch.PLUS else minus)


@dataclass(frozen=True)
class PhaseLossOutcome:
    holds: bool
    degenerate: bool
    probabilities: tuple[tuple[float, float], tuple[float, float]]

    def __bool__(self):
        return self.holds


def phase_loss_demo(theta: float, phi1: float, phi2: float) -> PhaseLossOutcome:
    """Two states differing only in azimuth give identical z statistics.

    The outcome is truthy when the z probabilities agree and the states are
    distinct; at ``theta`` in {0, pi} or ``phi1 == phi2 (mod 2 pi)`` the states
    coincide and ``degenerate`` is set (still truthy).
    """
    def state(phi):
        return spinor(math.cos(theta / 2), complex(math.cos(phi), math.sin(phi))
                      * math.sin(theta / 2))

    z = DeviceOrientation(np.array([0.0, 0.0, 1.0]))
    s1, s2 = state(phi1), state(phi2)
    r1, r2 = project(s1, z), project(s2, z)
    same_probs = (abs(r1.p_plus - r2.p_plus) <= TOL_ALG
                  and abs(r1.p_minus - r2.p_minus) <= TOL_ALG)
    degenerate = (abs(math.sin(theta)) <= 1e-9
                  or abs(complex(math.cos(phi1 - phi2), math.sin(phi1 - phi2)) - 1) <= 1e-9)
    holds = same_probs and (degenerate or not state_equal(s1, s2))
    return PhaseLossOutcome(holds, degenerate,
                            ((r1.p_plus, r1.p_minus), (r2.p_plus, r2.p_minus)))
