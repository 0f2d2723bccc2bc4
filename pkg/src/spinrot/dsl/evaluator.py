"""Execute rotation programs and render their traces."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from ..bloch import bloch_point, spinor_from_bloch
from ..measurement import Branch, DeviceOrientation, collapse, project
from ..rotation import (
    AxisAngle,
    EulerZYZ,
    RotationConvention,
    audit_convention,
    compose_euler,
    rotation_operator,
)
from ..su2 import TOL_ALG, axis_from_angles, canonical_phase, det, eigenspinors, spinor
from . import ast

SCHEMA_VERSION = 1

_X, _Y = np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0])
NAMED_STATES = {
    "up": np.array([1, 0], dtype=np.complex128),
    "down": np.array([0, 1], dtype=np.complex128),
    "x+": eigenspinors(_X)[0],
    "x-": eigenspinors(_X)[1],
    "y+": eigenspinors(_Y)[0],
    "y-": eigenspinors(_Y)[1],
}

_BANNER = {
    RotationConvention.PAPER_RIGHT: "U+_n(phi) = exp(+i phi/2 sigma.n)",
    RotationConvention.TEXTBOOK_LEFT: "U_n(phi) = exp(-i phi/2 sigma.n)",
}


class EvalError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0):
        super().__init__(f"{line}:{col}: {message}" if line else message)
        self.line, self.col = line, col


class InvariantViolation(Exception):
    """The state norm or operator determinant drifted beyond tolerance."""


@dataclass(frozen=True)
class StepRecord:
    index: int
    line: int
    statement: str
    convention: RotationConvention
    state: np.ndarray  # canonical phase
    bloch: np.ndarray
    operator: np.ndarray
    output: dict | None = None


@dataclass
class EvalTrace:
    convention: RotationConvention
    steps: list[StepRecord] = field(default_factory=list)

    @property
    def outputs(self) -> list[StepRecord]:
        return [s for s in self.steps if s.output is not None]

    @property
    def final(self) -> StepRecord:
        return self.steps[-1]


def _axis_vector(axis) -> np.ndarray:
    return np.asarray(axis.vector, dtype=np.float64)


def evaluate(program: ast.Program,
             convention: RotationConvention = RotationConvention.PAPER_RIGHT,
             ) -> EvalTrace:
    """Run ``program`` from the spin-up state and the identity operator.

    ``convention`` is the starting convention; a ``convention`` statement
    overrides it from that point on.
    """
    conv = convention
    state = NAMED_STATES["up"]
    op = np.eye(2, dtype=np.complex128)
    device = None
    trace = EvalTrace(convention)
    for idx, stmt in enumerate(program.statements):
        line, col = stmt.pos
        output = None
        try:
            if isinstance(stmt, ast.SetConvention):
                conv = stmt.convention
            elif isinstance(stmt, ast.NamedState):
                state = NAMED_STATES[stmt.name]
            elif isinstance(stmt, ast.VectorState):
                state = spinor(stmt.up, stmt.down)
            elif isinstance(stmt, ast.BlochState):
                state = spinor_from_bloch(axis_from_angles(stmt.theta, stmt.phi))
            elif isinstance(stmt, (ast.Rot, ast.Euler)):
                if isinstance(stmt, ast.Rot):
                    w = rotation_operator(AxisAngle(_axis_vector(stmt.axis), stmt.angle), conv)
                else:
                    w = compose_euler(EulerZYZ(stmt.alpha, stmt.beta, stmt.gamma), stmt.mode, conv)
                state = w @ state
                op = w @ op
            elif isinstance(stmt, ast.Measure):
                device = DeviceOrientation(_axis_vector(stmt.axis))
                res = project(state, device)
                output = {"measurement": {"axis": device.axis.tolist(), **res.as_dict()}}
            elif isinstance(stmt, ast.Collapse):
                if device is None:
                    raise EvalError("collapse needs a preceding measure", line, col)
                branch = Branch(stmt.branch)
                res = project(state, device)
                p = res.p_plus if branch is Branch.PLUS else res.p_minus
                state = collapse(state, device, branch)
                output = {"collapse": {"axis": device.axis.tolist(), "branch": branch.value,
                                       "probability": p}}
            elif isinstance(stmt, ast.Audit):
                output = {"audit": audit_convention(op).as_dict()}
            elif isinstance(stmt, ast.Emit):
                output = {}
        except EvalError:
            raise
        except (ValueError, ArithmeticError) as exc:
            raise EvalError(str(exc), line, col) from exc
        _check_invariants(state, op, line)
        record = StepRecord(idx, line, stmt.pretty(), conv, canonical_phase(state),
                            bloch_point(state), op.copy(), output)
        if isinstance(stmt, ast.Emit):
            record = _with_emit(record, stmt.what)
        trace.steps.append(record)
    return trace


def _check_invariants(state, op, line):
    if abs(np.linalg.norm(state) - 1) > TOL_ALG:
        raise InvariantViolation(f"line {line}: state norm {np.linalg.norm(state)!r}")
    if abs(det(op) - 1) > TOL_ALG:
        raise InvariantViolation(f"line {line}: operator determinant {det(op)!r}")


def _with_emit(record: StepRecord, what: str) -> StepRecord:
    keys = ("state", "bloch", "operator") if what == "all" else (what,)
    out = {}
    for k in keys:
        out[k] = _jsonable(k, getattr(record, k))
    return StepRecord(record.index, record.line, record.statement, record.convention,
                      record.state, record.bloch, record.operator, out)


def _jsonable(key: str, value):
    if key == "bloch":
        return [_clean(v) for v in value]
    if key == "state":
        return [[_clean(z.real), _clean(z.imag)] for z in value]
    return [[[_clean(z.real), _clean(z.imag)] for z in row] for row in value]


def _clean(x: float) -> float:
    # avoid "-0.0" in output
    return float(x) + 0.0


# rendering ----------------------------------------------------------------

def _fmt_complex(re_im) -> str:
    re, im = re_im
    return f"{re:.12g}{'-' if im < 0 else '+'}{abs(im):.12g}i"


def _fmt_vec(v) -> str:
    return "(" + ", ".join(f"{x:.12g}" for x in v) + ")"


def _text_output(step: StepRecord) -> list[str]:
    out = step.output
    lines = [f"[{step.index + 1}] line {step.line}: {step.statement}"]
    if "state" in out:
        lines.append("  state    = (" + ", ".join(_fmt_complex(z) for z in out["state"]) + ")")
    if "bloch" in out:
        lines.append("  bloch    = " + _fmt_vec(out["bloch"]))
    if "operator" in out:
        for i, row in enumerate(out["operator"]):
            label = "  operator = " if i == 0 else "             "
            lines.append(label + "[" + ", ".join(_fmt_complex(z) for z in row) + "]")
    if "measurement" in out:
        m = out["measurement"]
        lines.append(f"  measure along {_fmt_vec(m['axis'])}: "
                     f"p(+) = {m['p_plus']:.12g}, p(-) = {m['p_minus']:.12g}")
        lines.append(f"  amp(+) = {_fmt_complex(m['amp_plus'])}, "
                     f"amp(-) = {_fmt_complex(m['amp_minus'])}")
    if "collapse" in out:
        c = out["collapse"]
        lines.append(f"  collapse {c['branch']} along {_fmt_vec(c['axis'])} "
                     f"(p = {c['probability']:.12g})")
    if "audit" in out:
        a = out["audit"]
        label = "identity" if a["handedness"] == "identity" else a["handedness"] + " screw"
        lines.append(f"  audit: {label}, axis {_fmt_vec(a['axis'])}, "
                     f"angle {a['angle']:.12g} rad ({math.degrees(a['angle']):.12g} deg)"
                     + (" [tie-break]" if a["tie_break"] else ""))
    return lines


def _step_dict(step: StepRecord) -> dict:
    d = {"index": step.index, "line": step.line, "statement": step.statement,
         "convention": step.convention.value}
    d.update(step.output)
    return d


def render(trace: EvalTrace, format: str = "text") -> str:
    """Render ``trace`` as ``"text"`` or ``"json"``; output is deterministic."""
    final = trace.final
    if format == "json":
        doc = {
            "schema": SCHEMA_VERSION,
            "convention": trace.convention.value,
            "outputs": [_step_dict(s) for s in trace.outputs],
            "final": {
                "convention": final.convention.value,
                "state": _jsonable("state", final.state),
                "bloch": _jsonable("bloch", final.bloch),
                "operator": _jsonable("operator", final.operator),
            },
        }
        return json.dumps(doc, indent=2) + "\n"
    if format != "text":
        raise ValueError(f"unknown format {format!r}")
    lines = [f"convention: {trace.convention.value} ({_BANNER[trace.convention]})"]
    for step in trace.outputs:
        lines.extend(_text_output(step))
    lines.append(f"final ({final.convention.value}):")
    lines.append("  state    = (" + ", ".join(
        _fmt_complex(z) for z in _jsonable("state", final.state)) + ")")
    lines.append("  bloch    = " + _fmt_vec(_jsonable("bloch", final.bloch)))
    return "\n".join(lines) + "\n"
