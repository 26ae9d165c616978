"""One test per acceptance criterion, at the stated tolerances.

The conftest prints an ``ACnn PASS|FAIL`` line per criterion at the end of
the run.
"""

import json
import math
import time
from fractions import Fraction

import numpy as np
import pytest

from sigmak import bray_football as bf
from sigmak.certificates.lemmas import c0_enclosure
from sigmak.cli import main
from sigmak.curvature import (
    CurvaturePoint,
    PeriodicField,
    gvw_ricci_coefficient,
    lambda_bound_4d,
    schouten,
    schouten_spectrum,
    solve_linearized_periodic,
    sphere_volume,
)
from sigmak.interval import ARCSIN_SELF_TEST
from sigmak.symm_poly import sigma_k, sigma_k_sphere

from test_curvature import fd2_errors, fourier_residual, random_point
from test_interval import FUZZ_CASES, run_containment_fuzz
from test_symm_poly import (
    check_brute_force_oracle,
    check_cone_nesting,
    check_lambda_normalization,
    check_newton_maclaurin,
)
from test_phase_plane import oracle_differences, oracle_pairs

acceptance = pytest.mark.acceptance


def cli_json(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


@acceptance(1, "alpha(1/2) = 1 within 1e-6, z_star = 4 pi, < 5 s")
def test_ac01_alpha_half(capsys):
    t0 = time.perf_counter()
    code, out = cli_json(capsys, "alpha", "--eps", "0.5")
    elapsed = time.perf_counter() - t0
    d = json.loads(out)
    assert code == 0
    assert abs(d["alpha"] - 1.0) <= 1e-6
    assert d["z_star"] == 4 * math.pi
    assert elapsed < 5.0


@acceptance(2, "verify --all exits 0 with the full chain, < 60 s at depth 40")
def test_ac02_verify_all(capsys, monkeypatch):
    monkeypatch.delenv("SYL_MAX_DEPTH", raising=False)
    t0 = time.perf_counter()
    code, out = cli_json(capsys, "verify", "--all", "--max-depth", "40")
    elapsed = time.perf_counter() - t0
    assert code == 0 and elapsed < 60.0
    doc = json.loads(out)
    assert doc["status"] == "PASS"
    certs = {c["lemma_id"]: c for c in doc["certificates"]}
    assert set(certs) >= {"arcsin_cubic", "i1_small", "efg", "sum_small", "h_large", "theorem_eps_half"}
    assert all(c["status"] == "PASS" for c in certs.values())

    def check(cert, name):
        return next(c for c in cert["checks"] if c["name"] == name)

    efg = {c["lemma_id"] for c in certs["efg"]["components"]}
    assert efg == {"E_small", "E_large", "F", "EF", "G"}
    bracket = check(certs["sum_small"], "bracket")
    assert bracket["passed"] and bracket["enclosure"][1] < 0
    h = certs["h_large"]
    assert check(h, "H_at_split")["enclosure"][1] < 0.9881
    assert check(h, "final")["passed"]
    parts = {c["lemma_id"] for c in h["components"]}
    assert {"J_bound", "K_bound", "convexity"} <= parts


@acceptance(3, "c0 enclosure contains 0.604795 (truncated) and is below 0.61")
def test_ac03_c0():
    l, _, c0 = c0_enclosure(Fraction(4, 5))
    assert l == Fraction(29, 69)
    # "= 0.604795..." names the leading digits; the enclosure is 0.6047955083...
    assert math.floor(c0.lo * 1e6) == 604795 and math.floor(c0.hi * 1e6) == 604795
    assert c0.hi < 0.61


@acceptance(4, "epsilon0 in (0.12, 0.15), bracket width <= 1e-4, < 120 s")
def test_ac04_epsilon0(capsys):
    t0 = time.perf_counter()
    code, out = cli_json(capsys, "epsilon0")
    elapsed = time.perf_counter() - t0
    d = json.loads(out)
    assert code == 0
    assert 0.12 < d["estimate"] < 0.15
    assert d["bracket_hi"] - d["bracket_lo"] <= 1e-4
    assert d["bracket_lo"] <= d["estimate"] <= d["bracket_hi"]
    assert elapsed < 120.0


@acceptance(5, "phase-plane ODE agrees with quadrature within 1e-4 at 30 pairs, < 30 s")
def test_ac05_oracle_equivalence():
    t0 = time.perf_counter()
    diffs = oracle_differences()
    elapsed = time.perf_counter() - t0
    assert len(diffs) == len(oracle_pairs()) == 30
    assert max(diffs) <= 1e-4
    assert elapsed < 30.0


@acceptance(6, "I1 quadrature vs closed form <= 1e-8 on 50 phi; I1(1) = 1/sqrt2, I2(0) = 1")
def test_ac06_closed_form():
    worst = 0.0
    for phi in np.linspace(0.01, 0.99, 50):
        worst = max(worst, abs(bf.I1(bf.z_of_phi(phi), 0.5) - bf.I1_closed_form(phi)))
    assert worst <= 1e-8
    assert abs(bf.I1(bf.z_of_phi(1.0), 0.5) - 1 / math.sqrt(2)) <= 1e-6
    # phi = 0 is z = 4 pi; approach it from inside as well
    assert abs(bf.I2(bf.z_of_phi(0.0), 0.5) - 1.0) <= 1e-6
    assert abs(bf.I2(bf.z_of_phi(1e-4), 0.5) - 1.0) <= 1e-6


@acceptance(7, "sigma_k oracle, cone nesting on 1e4 spectra, Newton-Maclaurin, sigma_k(lambda_k 1) = 1")
def test_ac07_symmetric_functions():
    assert check_brute_force_oracle() > 0
    assert check_cone_nesting(10_000) > 0
    assert check_newton_maclaurin(10_000, rtol=1e-12) > 0
    assert check_lambda_normalization(1e-12) == 36


@acceptance(8, "Schouten of S^n, trace identity, GVW(3,2), sigma_2(S^4), vol(S^4), 4-d bound")
def test_ac08_curvature():
    for n in range(3, 9):
        p = CurvaturePoint.unit_sphere(n)
        assert np.max(np.abs(schouten(p) - 0.5 * p.g)) <= 1e-12
    for seed in range(20):
        n = 3 + seed % 6
        p = random_point(n, seed)
        tr = schouten_spectrum(schouten(p), p.g).sum()
        target = p.R / (2 * (n - 1))
        assert abs(tr - target) <= 1e-12 * max(1.0, abs(target))
    assert gvw_ricci_coefficient(3, 2) == pytest.approx(1 / 6, rel=1e-15)
    assert sigma_k_sphere(4, 2) == 1.5
    assert sigma_k((0.5,) * 4, 2) == 1.5
    assert sphere_volume(4) == pytest.approx(8 * math.pi**2 / 3, rel=1e-15)
    b = lambda_bound_4d(3, 1)
    assert b.value == pytest.approx(2 * math.pi**2, rel=1e-15) and b.subcritical


@acceptance(9, "linearized solver: residual < 1e-8, constant f -> c/2, O(h^2) for fd2")
def test_ac09_linearized():
    assert fourier_residual(points=256) < 1e-8
    for c in (0.0, 1.0, -2.5, 3.75):
        f = PeriodicField((256,), np.full(256, c), 1 / 256)
        assert np.all(solve_linearized_periodic(f, 4, 2).values == c / 2)
    errs = fd2_errors((32, 64, 128, 256))
    rates = [math.log2(a / b) for a, b in zip(errs, errs[1:])]
    assert len(rates) == 3
    assert all(abs(r - 2.0) < 0.05 for r in rates)


@acceptance(10, "interval kernel: 1e5 containment fuzz, inclusion monotonicity, arcsin self-test")
def test_ac10_interval_kernel():
    counts = run_containment_fuzz(FUZZ_CASES)
    assert counts["add"] == FUZZ_CASES
    assert ARCSIN_SELF_TEST.passed and ARCSIN_SELF_TEST.n_checked == 64
    # inclusion monotonicity: nested random boxes
    from sigmak.interval import Interval, arcsin_i, sqrt_i

    rng = np.random.default_rng(17)
    for _ in range(2_000):
        xs = np.sort(rng.uniform(-10, 10, 4))
        ys = np.sort(rng.uniform(0.5, 10, 4))
        a, A = Interval(xs[1], xs[2]), Interval(xs[0], xs[3])
        b, B = Interval(ys[1], ys[2]), Interval(ys[0], ys[3])
        for op in (lambda u, v: u + v, lambda u, v: u - v, lambda u, v: u * v, lambda u, v: u / v):
            assert op(a, b).subset_of(op(A, B))
        assert sqrt_i(b).subset_of(sqrt_i(B))
        ua, uA = Interval(xs[1] / 10, xs[2] / 10), Interval(xs[0] / 10, xs[3] / 10)
        assert arcsin_i(ua).subset_of(arcsin_i(uA))
