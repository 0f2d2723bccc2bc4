"""Run the bundled example programs and check them against direct computation."""

from __future__ import annotations

import math
from importlib import resources

import numpy as np

from .bloch import frame_sigma_dot, lemma3_check, make_frame
from .dsl.evaluator import NAMED_STATES, EvalTrace, evaluate
from .dsl.parser import parse_source
from .rotation import EulerMode, EulerZYZ, RotationConvention, compose_euler
from .su2 import (
    allclose_up_to_sign,
    eigenspinors,
    inner,
    max_abs_diff,
    pauli_x,
    pauli_y,
    state_equal,
)

_X = np.array([1.0, 0.0, 0.0])
_Z = np.array([0.0, 0.0, 1.0])


def program_names() -> list[str]:
    return sorted(p.name for p in resources.files("spinrot").joinpath("programs").iterdir()
                  if p.name.endswith(".rot"))


def load_program(name: str) -> str:
    return resources.files("spinrot").joinpath("programs", name).read_text()


def _emitted(trace: EvalTrace, key: str) -> list:
    return [s for s in trace.outputs if key in s.output]


def _op(step) -> np.ndarray:
    return np.array([[complex(*z) for z in row] for row in step.output["operator"]])


def _audit(trace):
    return _emitted(trace, "audit")[-1].output["audit"]


def check_sigma_conjugation(trace):
    w = _op(_emitted(trace, "operator")[0])
    a = _audit(trace)
    yield "sigma_y -> sigma_x", max_abs_diff(w @ pauli_y() @ w.conj().T, pauli_x()) <= 1e-12
    yield "audit right screw about z by pi/2", (
        a["handedness"] == "right"
        and max_abs_diff(a["axis"], _Z) <= 1e-12
        and abs(a["angle"] - math.pi / 2) <= 1e-12)


def check_quarter_turn(trace):
    chi_x = eigenspinors(_X)[0]
    step = _emitted(trace, "state")[-1]
    raw = step.operator @ NAMED_STATES["y+"]
    yield "U+ chi_y = e^{i pi/4} chi_x", max_abs_diff(raw, np.exp(1j * math.pi / 4) * chi_x) <= 1e-12
    yield "state equals chi_x", state_equal(step.state, chi_x)
    yield "bloch (1, 0, 0)", max_abs_diff(step.output["bloch"], _X) <= 1e-10


def check_euler(trace):
    a, b, g = (math.radians(v) for v in (30, 50, 70))
    intrinsic = _op(_emitted(trace, "operator")[0])
    extrinsic = compose_euler(EulerZYZ(g, b, a), EulerMode.EXTRINSIC_ZYZ,
                              RotationConvention.PAPER_RIGHT)
    yield "intrinsic (a,b,g) == extrinsic (g,b,a)", allclose_up_to_sign(intrinsic, extrinsic)
    yield "round trip is the identity", allclose_up_to_sign(trace.final.operator, np.eye(2))
    yield "audit reports identity", _audit(trace)["handedness"] == "identity"
    yield "state restored", state_equal(trace.final.state, NAMED_STATES["x+"])


def check_frame_overlap(trace):
    t = np.array([0.6, 0.0, 0.8])
    q = np.array([0.0, 0.6, 0.8])
    theta_t, theta_q = math.radians(70), math.radians(40)
    first, second = _emitted(trace, "state")
    chi_z = first.operator @ NAMED_STATES["up"]
    moved = second.operator @ NAMED_STATES["up"]
    frame = make_frame(t, theta_t)
    u_plus = (math.cos(theta_q / 2) * np.eye(2)
              + 1j * math.sin(theta_q / 2) * frame_sigma_dot(frame, q))
    up = NAMED_STATES["up"]
    yield "global overlap == frame overlap", abs(inner(chi_z, moved) - inner(up, u_plus @ up)) <= 1e-12
    yield "lemma3_check", lemma3_check(frame, q, theta_q)


def check_stern_gerlach(trace):
    first, second = _emitted(trace, "measurement")
    p = math.cos(math.radians(30)) ** 2
    yield "p(+) = cos^2(theta/2)", abs(first.output["measurement"]["p_plus"] - p) <= 1e-12
    yield "probabilities sum to 1", all(
        abs(s.output["measurement"]["p_plus"] + s.output["measurement"]["p_minus"] - 1) <= 1e-12
        for s in (first, second))
    yield "collapsed state re-measured along z", abs(second.output["measurement"]["p_plus"] - p) <= 1e-12


def check_textbook(trace):
    a = _audit(trace)
    yield "audit left screw about z by pi/2", (
        a["handedness"] == "left" and max_abs_diff(a["axis"], _Z) <= 1e-12
        and abs(a["angle"] - math.pi / 2) <= 1e-12)


CHECKS = {
    "sigma_y_conjugation.rot": check_sigma_conjugation,
    "quarter_turn_chi_y.rot": check_quarter_turn,
    "euler_ordering.rot": check_euler,
    "frame_overlap.rot": check_frame_overlap,
    "stern_gerlach.rot": check_stern_gerlach,
    "textbook_audit.rot": check_textbook,
}


def run_selftest(out=print) -> bool:
    """Evaluate every bundled program, print one line per check, return overall status."""
    ok_all = True
    for name in program_names():
        program = parse_source(load_program(name))
        roundtrip = parse_source(program.pretty()) == program
        trace = evaluate(program)
        results = [("print/parse round trip", roundtrip)]
        results += list(CHECKS[name](trace)) if name in CHECKS else []
        for label, ok in results:
            ok_all &= bool(ok)
            out(f"{'PASS' if ok else 'FAIL'}  {name}: {label}")
    return ok_all
