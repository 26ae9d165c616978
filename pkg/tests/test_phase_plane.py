import math

import numpy as np
import pytest

from sigmak import bray_football as bf
from sigmak.errors import DomainError
from sigmak.phase_plane import ode_rhs, phase_path

FOUR_PI = 4 * math.pi


def oracle_pairs():
    pairs = []
    for eps in (0.3, 0.5, 0.8):
        z_min, z_max = bf.z_range(eps)
        for frac in np.linspace(0.0, 1.0, 10):
            pairs.append((eps, float(z_min + frac * (z_max - z_min))))
    return pairs


def oracle_differences():
    out = []
    for eps, z in oracle_pairs():
        path = phase_path(eps, z)
        out.append(abs(path.alpha_candidate - bf.integral_sum(z, eps)[0]))
    return out


def test_rhs_sign_and_branches():
    for x, y in [(0.1, 1.0), (5.0, 10.0), (30.0, 0.5)]:
        assert ode_rhs(x, y, 0.5) < 0
    # close to the y-axis (36 pi - y^2 >> x^(2/3)) the Ricci branch wins
    x, y, eps = 1e-3, 10.0, 0.5
    assert ode_rhs(x, y, eps) == pytest.approx(-(3 * eps * 2 / 2) * x ** (-1 / 3) / y, rel=1e-15)
    # with y^2 near 36 pi the scalar branch is about 3/2 R0 = 9 and wins instead
    x, y = 1.0, math.sqrt(36 * math.pi) - 1e-3
    assert ode_rhs(x, y, eps) < -(3 * eps * 2 / 2) * x ** (-1 / 3) / y
    with pytest.raises(DomainError):
        ode_rhs(0.0, 1.0, 0.5)
    with pytest.raises(DomainError):
        ode_rhs(1.0, 0.0, 0.5)


def test_branch_crossing_at_half():
    # the branches meet where 36 pi - y^2 = 18 x^(2/3)
    x = 8.0
    y = math.sqrt(36 * math.pi - 18 * x ** (2 / 3))
    scalar = 9 - (36 * math.pi - y * y) / (3 * x ** (2 / 3))
    assert scalar == pytest.approx(3 * 0.5 * 2)


def test_endpoint_alpha():
    assert phase_path(0.5, FOUR_PI).alpha_candidate == pytest.approx(1.0, abs=1e-4)


def test_path_shape():
    z = 3 * math.pi
    path = phase_path(0.5, z)
    ys = [s[1] for s in path.samples]
    xs = [s[0] for s in path.samples]
    assert all(b <= a for a, b in zip(ys, ys[1:]))
    assert ys[0] > 0 and ys[-1] == 0.0
    assert path.terminal_x == pytest.approx(z**1.5, rel=1e-6)
    assert path.alpha_candidate == pytest.approx(bf.integral_sum(z, 0.5)[0], abs=1e-4)
    assert all(b >= a - 1e-12 for a, b in zip(xs, xs[1:]))


def test_oracle_smoke():
    diffs = [abs(phase_path(e, z).alpha_candidate - bf.integral_sum(z, e)[0])
             for e, z in oracle_pairs()[::7]]
    assert max(diffs) <= 1e-6


def test_rejects():
    with pytest.raises(DomainError):
        phase_path(1.0, FOUR_PI)
    with pytest.raises(DomainError):
        phase_path(0.5, 1.0)
