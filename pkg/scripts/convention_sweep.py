"""Sweep random axis-angle pairs through both conventions and tabulate the auditor verdicts.

    python3 scripts/convention_sweep.py --samples 2000 --seed 7
"""

import argparse
import collections
import math
from dataclasses import dataclass

import numpy as np

from spinrot.rotation import (
    AxisAngle,
    RotationConvention,
    adjoint_so3,
    audit_convention,
    rodrigues,
    rotation_operator,
)


@dataclass(frozen=True)
class SweepConfig:
    samples: int = 1000
    seed: int = 0
    max_angle: float = math.pi


def run(cfg: SweepConfig):
    rng = np.random.default_rng(cfg.seed)
    verdicts = collections.Counter()
    worst = {conv: 0.0 for conv in RotationConvention}
    for _ in range(cfg.samples):
        n = rng.normal(size=3)
        n /= np.linalg.norm(n)
        phi = rng.uniform(0, cfg.max_angle)
        for conv in RotationConvention:
            w = rotation_operator(AxisAngle(n, phi), conv)
            # the report is relative to the generating axis, so the verdict is the screw sense of conv
            rep = audit_convention(w, reference_axis=n)
            verdicts[conv.value, rep.handedness.value] += 1
            r = rodrigues(AxisAngle(n, conv.sign * phi))
            worst[conv] = max(worst[conv], float(np.abs(adjoint_so3(w) - r).max()))
    return verdicts, worst


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=SweepConfig.samples)
    p.add_argument("--seed", type=int, default=SweepConfig.seed)
    cfg = SweepConfig(**vars(p.parse_args()))
    verdicts, worst = run(cfg)
    print(f"{'convention':<12}{'verdict':<10}{'count':>8}")
    for (conv, hand), count in sorted(verdicts.items()):
        print(f"{conv:<12}{hand:<10}{count:>8}")
    for conv, err in worst.items():
        print(f"max |Ad(W) - Rodrigues(n, {'+' if conv.sign > 0 else '-'}phi)| for {conv.value}: {err:.3e}")


if __name__ == "__main__":
    main()
