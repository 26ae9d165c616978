import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sigmak.errors import ConeError, DomainError
from sigmak.symm_poly import (
    Spectrum,
    cone_report,
    elementary_symmetric,
    gamma_kn,
    in_gamma_k_plus,
    lambda_k,
    normalized_sigma,
    sigma_k,
    sigma_k_sphere,
)


def brute_sigma(values, k):
    """Sum of products over all k-subsets, exactly in rationals."""
    return sum(math.prod(Fraction(v) for v in c) for c in itertools.combinations(values, k))


def random_spectra(count, seed=11):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(3, 9))
        # shift so a healthy fraction lands in the cones
        yield (rng.normal(size=n) + rng.uniform(-0.5, 1.5)).tolist()


def check_brute_force_oracle(trials=300, seed=3) -> int:
    rng = np.random.default_rng(seed)
    checked = 0
    for _ in range(trials):
        n = int(rng.integers(3, 9))
        vals = [int(v) for v in rng.integers(-20, 21, size=n)]
        for k in range(1, n + 1):
            assert sigma_k(vals, k) == brute_sigma(vals, k), (vals, k)
            checked += 1
    return checked


def check_cone_nesting(count=10_000) -> int:
    members = 0
    for s in random_spectra(count):
        n = len(s)
        flags = [in_gamma_k_plus(s, k) for k in range(1, n + 1)]
        for k in range(1, n):
            if flags[k]:
                assert flags[k - 1], (s, k)
        rep = cone_report(s)
        assert all(flags[: rep.max_k]) and (rep.max_k == n or not flags[rep.max_k])
        members += rep.max_k > 0
    return members


def check_newton_maclaurin(count=10_000, rtol=1e-12) -> int:
    checked = 0
    for s in random_spectra(count, seed=5):
        rep = cone_report(s)
        vals = [normalized_sigma(s, k) for k in range(1, rep.max_k + 1)]
        for a, b in zip(vals, vals[1:]):
            assert b <= a * (1 + rtol), (s, vals)
            checked += 1
    return checked


def check_lambda_normalization(tol=1e-12) -> int:
    checked = 0
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert abs(elementary_symmetric([lambda_k(n, k)] * n, k)[k] - 1.0) <= tol
            checked += 1
    return checked


def test_documented_examples():
    assert sigma_k((1, 2, 3), 2) == 11
    assert sigma_k((0.5,) * 4, 2) == 1.5
    assert sigma_k((1, 1, 1), 3) == 1
    assert in_gamma_k_plus((1, 1, 1), 3)
    assert not in_gamma_k_plus((-1, -1, -1), 2)
    assert in_gamma_k_plus((3, 1, -0.5), 2)
    assert sigma_k((3, 1, -0.5), 2) == pytest.approx(1.0)
    for n in range(3, 9):
        for k in range(1, n + 1):
            assert normalized_sigma((1.0,) * n, k) == pytest.approx(1.0, rel=1e-15)
    assert normalized_sigma((0.5,) * 4, 1) == pytest.approx(0.5)
    assert normalized_sigma((0.5,) * 4, 2) == pytest.approx(0.5)
    assert normalized_sigma((1, 2, 3), 1) == pytest.approx(2.0)
    assert normalized_sigma((1, 2, 3), 2) == pytest.approx(math.sqrt(11 / 3))


def test_constants():
    assert lambda_k(4, 2) == pytest.approx(6**-0.5, rel=1e-15)
    for n in range(1, 9):
        assert lambda_k(n, n) == 1.0
        assert sigma_k_sphere(n, n) == 2.0**-n
        assert gamma_kn(n, n) == pytest.approx(1.0 / n, rel=1e-15)
    assert sigma_k_sphere(4, 2) == 1.5
    assert sigma_k_sphere(3, 1) == 1.5
    assert gamma_kn(4, 2) == pytest.approx(math.sqrt(6) / 4, rel=1e-15)
    assert gamma_kn(3, 2) == pytest.approx(math.sqrt(3) / 3, rel=1e-15)


def test_errors():
    with pytest.raises(DomainError):
        sigma_k((1, 2, 3), 0)
    with pytest.raises(DomainError):
        sigma_k((1, 2, 3), 4)
    with pytest.raises(DomainError):
        in_gamma_k_plus((1, 2, 3), 5)
    with pytest.raises(DomainError):
        Spectrum((1.0, 2.0))
    with pytest.raises(DomainError):
        Spectrum((1.0, float("inf"), 2.0))
    with pytest.raises(ConeError):
        normalized_sigma((-1, -1, -1), 1)
    with pytest.raises(DomainError):
        lambda_k(3, 4)


def test_boundary_is_outside_open_cone():
    assert not in_gamma_k_plus((1, 0, 0), 2)  # sigma_2 = 0 exactly
    assert in_gamma_k_plus((1, 0, 0), 1)


def test_brute_force_oracle():
    assert check_brute_force_oracle(trials=100) > 0


def test_cone_nesting_and_maclaurin_smoke():
    assert check_cone_nesting(2_000) > 0
    assert check_newton_maclaurin(2_000) > 0


def test_lambda_normalization():
    assert check_lambda_normalization() == 36


@given(st.lists(st.floats(min_value=1e-3, max_value=1e3), min_size=3, max_size=8))
def test_positive_orthant_in_every_cone(vals):
    assert cone_report(vals).max_k == len(vals)


@given(st.lists(st.integers(min_value=-50, max_value=50), min_size=3, max_size=8))
def test_recurrence_matches_subsets_on_integers(vals):
    e = elementary_symmetric(vals)
    for k in range(1, len(vals) + 1):
        assert e[k] == brute_sigma(vals, k)


@given(
    st.lists(st.floats(min_value=-10, max_value=10), min_size=3, max_size=8),
    st.floats(min_value=0.1, max_value=10),
)
def test_sigma_k_homogeneous(vals, t):
    for k in range(1, len(vals) + 1):
        scaled = sigma_k([t * v for v in vals], k)
        base = sigma_k(vals, k) * t**k
        scale = max(1.0, sum(abs(v) for v in vals) ** k * t**k)
        assert abs(scaled - base) <= 1e-10 * scale


@given(st.permutations(list(range(-3, 5))))
def test_sigma_k_symmetric(perm):
    ref = elementary_symmetric(list(range(-3, 5)))
    assert elementary_symmetric(perm) == ref
