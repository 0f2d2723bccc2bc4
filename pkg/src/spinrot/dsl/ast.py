"""Program tree for the rotation DSL, plus a printer that re-parses to the same tree.

Angles are stored in radians and printed with ``repr`` so that a
print/parse round trip is bit-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from ..rotation import EulerMode, RotationConvention
from ..su2 import axis_from_angles


def _pos():
    return field(default=(0, 0), compare=False, repr=False)


def _num(x: float) -> str:
    return repr(float(x))


def _angle(x: float) -> str:
    return f"{_num(x)}rad"


def _complex(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{_num(z.real)}{sign}{_num(abs(z.imag))}i"


# axes ---------------------------------------------------------------------

@dataclass(frozen=True)
class NamedAxis:
    name: str

    @property
    def vector(self) -> np.ndarray:
        return np.eye(3)["xyz".index(self.name)]

    def pretty(self) -> str:
        return self.name


@dataclass(frozen=True)
class SphericalAxis:
    theta: float
    phi: float

    @property
    def vector(self) -> np.ndarray:
        return axis_from_angles(self.theta, self.phi)

    def pretty(self) -> str:
        return f"n({_angle(self.theta)}, {_angle(self.phi)})"


@dataclass(frozen=True)
class VectorAxis:
    x: float
    y: float
    z: float

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    def pretty(self) -> str:
        return f"v({_num(self.x)}, {_num(self.y)}, {_num(self.z)})"


Axis = NamedAxis | SphericalAxis | VectorAxis


# statements ---------------------------------------------------------------

@dataclass(frozen=True)
class SetConvention:
    convention: RotationConvention
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"convention {self.convention.value}"


@dataclass(frozen=True)
class NamedState:
    name: str
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"state {self.name}"


@dataclass(frozen=True)
class VectorState:
    up: complex
    down: complex
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"state ({_complex(self.up)}, {_complex(self.down)})"


@dataclass(frozen=True)
class BlochState:
    theta: float
    phi: float
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"state bloch({_angle(self.theta)}, {_angle(self.phi)})"


@dataclass(frozen=True)
class Rot:
    axis: Axis
    angle: float
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"rot {self.axis.pretty()} {_angle(self.angle)}"


@dataclass(frozen=True)
class Euler:
    alpha: float
    beta: float
    gamma: float
    mode: EulerMode
    pos: tuple = _pos()

    def pretty(self) -> str:
        return (f"euler({_angle(self.alpha)}, {_angle(self.beta)}, "
                f"{_angle(self.gamma)}) {self.mode.value}")


@dataclass(frozen=True)
class Measure:
    axis: Axis
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"measure {self.axis.pretty()}"


@dataclass(frozen=True)
class Collapse:
    branch: str  # "+" or "-"
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"collapse {self.branch}"


@dataclass(frozen=True)
class Audit:
    pos: tuple = _pos()

    def pretty(self) -> str:
        return "audit"


@dataclass(frozen=True)
class Emit:
    what: str  # state | bloch | operator | all
    pos: tuple = _pos()

    def pretty(self) -> str:
        return f"emit {self.what}"


Statement = (SetConvention | NamedState | VectorState | BlochState | Rot | Euler
             | Measure | Collapse | Audit | Emit)


@dataclass(frozen=True)
class Program:
    statements: tuple

    def pretty(self) -> str:
        return "".join(s.pretty() + "\n" for s in self.statements)
