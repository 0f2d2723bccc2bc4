"""Random generators and hypothesis strategies shared by the tests."""

import math

import numpy as np
from hypothesis import strategies as st


def random_axis(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_spinor(rng):
    s = rng.normal(size=2) + 1j * rng.normal(size=2)
    return s / np.linalg.norm(s)


def random_su2(rng):
    q = rng.normal(size=4)
    a, b, c, d = q / np.linalg.norm(q)
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def _normalise(v):
    v = np.array(v, dtype=float)
    return v / np.linalg.norm(v)


finite = st.floats(-1.0, 1.0, allow_nan=False)
axes = st.tuples(finite, finite, finite).filter(
    lambda v: math.sqrt(v[0] ** 2 + v[1] ** 2 + v[2] ** 2) > 1e-3).map(_normalise)
angles = st.floats(-4 * math.pi, 4 * math.pi, allow_nan=False)
phases = st.floats(0.0, 2 * math.pi, allow_nan=False)
spinors = st.tuples(finite, finite, finite, finite).filter(
    lambda v: sum(x * x for x in v) > 1e-3).map(
    lambda v: _normalise([v[0], v[1], v[2], v[3]])).map(
    lambda v: np.array([v[0] + 1j * v[1], v[2] + 1j * v[3]]))
