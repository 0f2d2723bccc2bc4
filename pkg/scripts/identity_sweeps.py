"""Worst-case residuals of the algebraic identities over random samples.

    python3 scripts/identity_sweeps.py --samples 5000
"""

import argparse
from dataclasses import dataclass

import numpy as np

from spinrot.bloch import frame_sigma_dot, make_frame
from spinrot.rotation import (
    AxisAngle,
    EulerMode,
    EulerZYZ,
    RotationConvention,
    adjoint_so3,
    compose_euler,
    rodrigues,
)
from spinrot.su2 import eigenspinors, identity2, inner, outer, paulis, sigma_along


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 1000
    seed: int = 0


def _axis(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def _su2(rng):
    q = rng.normal(size=4)
    a, b, c, d = q / np.linalg.norm(q)
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def _err(a, b) -> float:
    return float(np.abs(np.asarray(a) - np.asarray(b)).max())


def projector_transport(rng):
    u, r = np.exp(1j * rng.uniform(0, 2 * np.pi)) * _su2(rng), _axis(rng)
    plus, minus = (u @ s for s in eigenspinors(r))
    return _err(u @ sigma_along(r) @ u.conj().T, outer(plus, plus) - outer(minus, minus))


def frame_overlap(rng):
    f = make_frame(_axis(rng), rng.uniform(-2 * np.pi, 2 * np.pi))
    q, theta = _axis(rng), rng.uniform(-2 * np.pi, 2 * np.pi)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    up = np.array([1, 0], dtype=complex)
    chi_z = f.transport.conj().T @ up
    lhs = inner(up, (c * identity2() + 1j * s * frame_sigma_dot(f, q)) @ up)
    rhs = inner(chi_z, (c * identity2() + 1j * s * sigma_along(q)) @ chi_z)
    return abs(lhs - rhs)


def duality(rng):
    a = rodrigues(AxisAngle(_axis(rng), rng.uniform(-np.pi, np.pi)))
    r = _axis(rng)
    lhs = np.einsum("j,jk,kab->ab", r, a, np.array(paulis()))
    return _err(lhs, sigma_along(a.T @ r))


def homomorphism(rng):
    w1, w2 = _su2(rng), _su2(rng)
    return _err(adjoint_so3(w1 @ w2), adjoint_so3(w1) @ adjoint_so3(w2))


def euler_ordering(rng):
    a, b, g = rng.uniform(-2 * np.pi, 2 * np.pi, 3)
    conv = RotationConvention.PAPER_RIGHT
    w_in = compose_euler(EulerZYZ(a, b, g), EulerMode.INTRINSIC_ZYZ, conv)
    w_ex = compose_euler(EulerZYZ(g, b, a), EulerMode.EXTRINSIC_ZYZ, conv)
    return min(_err(w_in, w_ex), _err(w_in, -w_ex))


SWEEPS = {
    "projector transport": projector_transport,
    "frame overlap": frame_overlap,
    "Pauli duality": duality,
    "adjoint homomorphism": homomorphism,
    "zyz ordering": euler_ordering,
}


def run(cfg: SweepConfig) -> dict[str, float]:
    rng = np.random.default_rng(cfg.seed)
    return {name: max(fn(rng) for _ in range(cfg.samples)) for name, fn in SWEEPS.items()}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=SweepConfig.samples)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    cfg = SweepConfig(**vars(p.parse_args()))
    for name, worst in run(cfg).items():
        print(f"{name:<22}{worst:.3e}")


if __name__ == "__main__":
    main()
