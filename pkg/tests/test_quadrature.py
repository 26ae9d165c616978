import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigmak.quadrature import tanh_sinh


def test_polynomial():
    r = tanh_sinh(lambda x, dl, dr: x**3, 0.0, 2.0)
    assert r.value == pytest.approx(4.0, abs=1e-14)


def test_inverse_sqrt_both_ends():
    # int_0^1 (x (1 - x))^(-1/2) dx = pi
    r = tanh_sinh(lambda x, dl, dr: 1.0 / np.sqrt(dl * dr), 0.0, 1.0)
    assert r.value == pytest.approx(math.pi, abs=1e-13)
    assert r.error < 1e-10


def test_endpoint_distances_are_accurate():
    # using dr keeps full precision where b - x would be zero
    r = tanh_sinh(lambda x, dl, dr: dr**-0.5, 1.0, 2.0)
    assert r.value == pytest.approx(2.0, abs=1e-13)


def test_reversed_and_empty():
    f = lambda x, dl, dr: np.exp(x)  # noqa: E731
    assert tanh_sinh(f, 1.0, 0.0).value == pytest.approx(-(math.e - 1), abs=1e-14)
    assert tanh_sinh(f, 1.0, 1.0).value == 0.0


@given(st.floats(min_value=-0.5, max_value=3.0), st.floats(min_value=0.1, max_value=5.0))
def test_power_weight(p, b):
    # exponents below -1/2 lose mass to the |t| <= 4 truncation (see module docstring)
    # int_0^b x^p dx = b^(p+1) / (p+1)
    r = tanh_sinh(lambda x, dl, dr: dl**p, 0.0, b)
    exact = b ** (p + 1) / (p + 1)
    assert r.value == pytest.approx(exact, rel=1e-9)


def test_deterministic():
    f = lambda x, dl, dr: np.sin(x) / np.sqrt(dl)  # noqa: E731
    assert tanh_sinh(f, 0.0, 3.0) == tanh_sinh(f, 0.0, 3.0)
