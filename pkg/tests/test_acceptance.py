"""The twelve acceptance criteria, each at its stated tolerance.

Run under pytest (one PASS/FAIL line per criterion is written to the terminal)
or directly with ``python3 tests/test_acceptance.py``.
"""

import json
import math
import os
import shutil
import subprocess
import sys
from importlib import resources

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from helpers import random_axis, random_su2  # noqa: E402
from spinrot.bloch import lemma3_check, make_frame  # noqa: E402
from spinrot.dsl.parser import parse_source  # noqa: E402
from spinrot.measurement import DeviceOrientation, phase_loss_demo, project  # noqa: E402
from spinrot.rotation import (  # noqa: E402
    AxisAngle,
    EulerMode,
    EulerZYZ,
    Handedness,
    RotationConvention,
    adjoint_so3,
    audit_convention,
    canonical_axis,
    compose_euler,
    lemma2_check,
    pauli_transport_duality,
    rodrigues,
    rotation_operator,
)
from spinrot.selftest import load_program, program_names  # noqa: E402
from spinrot.su2 import (  # noqa: E402
    UP,
    allclose_up_to_sign,
    axis_from_angles,
    identity2,
    max_abs_diff,
    pauli_x,
    pauli_y,
    pauli_z,
    state_equal,
    tensor_pauli_basis,
)

RIGHT, LEFT = RotationConvention.PAPER_RIGHT, RotationConvention.TEXTBOOK_LEFT
SEED = 20261016
SQ2 = 1 / math.sqrt(2)


def _rng():
    return np.random.default_rng(SEED)


def c01_sigma_y_conjugation():
    w = rotation_operator(AxisAngle([0, 0, 1], math.pi / 2), RIGHT)
    err = max_abs_diff(w @ pauli_y() @ w.conj().T, pauli_x())
    return err <= 1e-12, f"max entry error {err:.2e}"


def c02_chi_y_rotation():
    chi_y = np.array([SQ2, 1j * SQ2])
    chi_x = np.array([SQ2, SQ2])
    out = rotation_operator(AxisAngle([0, 0, 1], math.pi / 2), RIGHT) @ chi_y
    err = max_abs_diff(out, np.exp(1j * math.pi / 4) * chi_x)
    same = state_equal(out, chi_x)
    return err <= 1e-12 and same, f"matrix error {err:.2e}, state-equal {same}"


def c03_convention_semantics():
    rng = _rng()
    n_samples, worst, bad = 200, 0.0, 0
    for _ in range(n_samples):
        n, phi = random_axis(rng), rng.uniform(0, math.pi)
        e_r = max_abs_diff(adjoint_so3(rotation_operator(AxisAngle(n, phi), RIGHT)),
                           rodrigues(AxisAngle(n, phi)))
        e_l = max_abs_diff(adjoint_so3(rotation_operator(AxisAngle(n, phi), LEFT)),
                           rodrigues(AxisAngle(n, -phi)))
        worst = max(worst, e_r, e_l)
        bad += (e_r > 1e-10) + (e_l > 1e-10)
    return bad == 0, f"{n_samples} samples, {bad} mismatches, worst {worst:.2e}"


def c04_projector_transport():
    rng = _rng()
    n_samples = 200
    # general U(2): SU(2) times a global phase
    ok = sum(lemma2_check(np.exp(1j * rng.uniform(0, 2 * math.pi)) * random_su2(rng),
                          random_axis(rng), 1e-12) for _ in range(n_samples))
    return ok == n_samples, f"{ok}/{n_samples} pass"


def c05_frame_overlap():
    rng = _rng()
    n_samples = 300
    ok = 0
    for _ in range(n_samples):
        f = make_frame(random_axis(rng), rng.uniform(-2 * math.pi, 2 * math.pi))
        ok += lemma3_check(f, random_axis(rng), rng.uniform(-2 * math.pi, 2 * math.pi), 1e-12)
    return ok == n_samples, f"{ok}/{n_samples} pass"


def c06_double_cover():
    rng = _rng()
    full_turn = max(max_abs_diff(rotation_operator(AxisAngle(random_axis(rng), 2 * math.pi), conv),
                                 -identity2())
                    for _ in range(20) for conv in (RIGHT, LEFT))
    sign_blind = all(np.array_equal(adjoint_so3(w), adjoint_so3(-w))
                     for w in (random_su2(rng) for _ in range(20)))
    hom = 0.0
    for _ in range(100):
        w1, w2 = random_su2(rng), random_su2(rng)
        hom = max(hom, max_abs_diff(adjoint_so3(w1 @ w2), adjoint_so3(w1) @ adjoint_so3(w2)))
    ok = full_turn <= 1e-12 and sign_blind and hom <= 1e-10
    return ok, f"U(2pi)+E {full_turn:.2e}, +-W identical {sign_blind}, homomorphism {hom:.2e}"


def c07_duality_sweep():
    rng = _rng()
    n_samples = 100
    ok = sum(pauli_transport_duality(rodrigues(AxisAngle(random_axis(rng), rng.uniform(-math.pi, math.pi))),
                                     random_axis(rng), 1e-12) for _ in range(n_samples))
    return ok == n_samples, f"{ok}/{n_samples} pass"


def c08_euler_ordering():
    rng = _rng()
    n_samples, ok = 100, 0
    for conv in (RIGHT, LEFT):
        for _ in range(n_samples):
            a, b, g = rng.uniform(-2 * math.pi, 2 * math.pi, 3)
            w_in = compose_euler(EulerZYZ(a, b, g), EulerMode.INTRINSIC_ZYZ, conv)
            w_ex = compose_euler(EulerZYZ(g, b, a), EulerMode.EXTRINSIC_ZYZ, conv)
            ok += allclose_up_to_sign(w_in, w_ex, 1e-12)
    return ok == 2 * n_samples, f"{ok}/{2 * n_samples} triples (both conventions)"


def c09_tensor_basis():
    built = tensor_pauli_basis()
    refs = (pauli_x(), 1j * pauli_y(), pauli_z(), identity2())
    err = max(max_abs_diff(b, r) for b, r in zip(built, refs))
    return err == 0.0, f"max entry error {err}"


def c10_measurement():
    rng = _rng()
    worst = 0.0
    for theta in rng.uniform(0, math.pi, 50):
        res = project(UP, DeviceOrientation(axis_from_angles(theta, rng.uniform(0, 2 * math.pi))))
        worst = max(worst, abs(res.p_plus - math.cos(theta / 2) ** 2))
    total = 0.0
    for _ in range(200):
        s = random_su2(rng)[:, 0]
        res = project(s, DeviceOrientation(random_axis(rng)))
        total = max(total, abs(res.p_plus + res.p_minus - 1))
    demos = sum(bool(phase_loss_demo(*rng.uniform(0, 2 * math.pi, 3))) for _ in range(100))
    ok = worst <= 1e-12 and total <= 1e-12 and demos == 100
    return ok, f"p+ error {worst:.2e}, sum error {total:.2e}, phase-loss {demos}/100"


def c11_auditor():
    rng = _rng()
    correct = 0
    for k in range(200):
        conv = RIGHT if k % 2 == 0 else LEFT
        n = canonical_axis(random_axis(rng))
        phi = rng.uniform(0.01, math.pi - 0.01)
        rep = audit_convention(rotation_operator(AxisAngle(n, phi), conv))
        want = Handedness.RIGHT_SCREW if conv is RIGHT else Handedness.LEFT_SCREW
        correct += (rep.handedness is want and max_abs_diff(rep.axis, n) <= 1e-9
                    and abs(rep.angle - phi) <= 1e-9)
    ties = [audit_convention(rotation_operator(AxisAngle(random_axis(rng), math.pi), conv))
            for conv in (RIGHT, LEFT)]
    tie_ok = all(t.tie_break and t.handedness is Handedness.RIGHT_SCREW for t in ties)
    return correct == 200 and tie_ok, f"{correct}/200 classified, pi tie-break {tie_ok}"


def c12_cli():
    exe = shutil.which("rotor")
    rotor = [exe] if exe else [sys.executable, "-m", "spinrot.cli"]
    proc = subprocess.run(rotor + ["selftest"], capture_output=True, text=True)
    with resources.as_file(resources.files("spinrot") / "programs" / "quarter_turn_chi_y.rot") as path:
        run = subprocess.run(rotor + ["run", str(path), "--format", "json"],
                             capture_output=True, text=True, check=True)
    err = max_abs_diff(json.loads(run.stdout)["outputs"][-1]["bloch"], [1, 0, 0])
    trips = 0
    for name in program_names():
        p = parse_source(load_program(name))
        trips += parse_source(p.pretty()) == p
    n = len(program_names())
    ok = proc.returncode == 0 and err <= 1e-10 and trips == n
    return ok, f"selftest exit {proc.returncode}, bloch error {err:.2e}, round trip {trips}/{n}"


CRITERIA = [
    (1, "sigma_y conjugated by the right quarter turn about z is sigma_x", c01_sigma_y_conjugation),
    (2, "quarter turn takes chi_y to e^{i pi/4} chi_x", c02_chi_y_rotation),
    (3, "adjoint action matches Rodrigues (right) and negated angle (left)", c03_convention_semantics),
    (4, "projector transport sweep", c04_projector_transport),
    (5, "frame-independent overlap sweep", c05_frame_overlap),
    (6, "double cover and homomorphism", c06_double_cover),
    (7, "Pauli transport duality sweep", c07_duality_sweep),
    (8, "intrinsic zyz equals reversed extrinsic zyz", c08_euler_ordering),
    (9, "tensor-built Pauli basis is exact", c09_tensor_basis),
    (10, "measurement probabilities and phase loss", c10_measurement),
    (11, "auditor handedness classification", c11_auditor),
    (12, "rotor selftest, JSON Bloch point, fixture round trip", c12_cli),
]


def _line(num, label, ok, detail):
    return f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {label} ({detail})"


@pytest.mark.parametrize("num, label, check", CRITERIA, ids=[f"c{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(num, label, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(num, label, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = []
    for num, label, check in CRITERIA:
        ok, detail = check()
        results.append(ok)
        print(_line(num, label, ok, detail))
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
