import csv
import io
import json
import math

import pytest

from sigmak import bray_football as bf
from sigmak.cli import RunConfig, build_parser, load_config, main, resolve_config
from sigmak.errors import DomainError


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alpha_json(capsys):
    code, out, _ = run(capsys, "alpha", "--eps", "0.5")
    assert code == 0
    d = json.loads(out)
    assert abs(d["alpha"] - 1.0) <= 1e-6
    assert d["z_star"] == 4 * math.pi


def test_alpha_round_trip(capsys):
    code, out, _ = run(capsys, "alpha", "--eps", "0.05")
    ev = bf.alpha(0.05)
    d = json.loads(out)
    assert d["alpha"] == ev.alpha and d["z_star"] == ev.z_star and d["alpha"] > 1


def test_alpha_bishop(capsys):
    code, out, _ = run(capsys, "alpha", "--eps", "1.0")
    assert code == 0 and json.loads(out)["alpha"] == 1.0


@pytest.mark.parametrize("argv", [
    ("alpha", "--eps", "0"),
    ("alpha", "--eps", "1.5"),
    ("alpha", "--eps", "abc"),
    ("alpha",),
    ("alpha-sweep", "--eps-min", "0.5", "--eps-max", "0.2"),
    ("constants", "--n", "3", "--k", "5"),
    ("verify", "--lemma", "nonsense"),
    ("verify", "--all", "--max-depth", "7"),
    ("curvature", "--ricci-eigs", "1,x,3"),
    ("curvature", "--ricci-lower", "1.0"),
    ("nonsense",),
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_sweep_csv(capsys, tmp_path):
    out_path = tmp_path / "sweep.csv"
    code, _, _ = run(capsys, "alpha-sweep", "--eps-min", "0.05", "--eps-max", "0.95",
                     "--steps", "19", "--output", str(out_path))
    assert code == 0
    text = out_path.read_text()
    assert text.splitlines()[0] == "epsilon,alpha,z_star,quad_error"
    rows = list(csv.DictReader(io.StringIO(text)))
    assert len(rows) == 19
    eps = [float(r["epsilon"]) for r in rows]
    assert eps == sorted(eps) and eps[0] == 0.05 and eps[-1] == 0.95
    assert all(float(r["alpha"]) >= 1 - 1e-8 for r in rows)
    assert abs(float(rows[-1]["alpha"]) - 1.0) <= 1e-6
    # bit-exact round trip
    assert float(rows[0]["alpha"]) == bf.alpha(0.05).alpha


def test_verify_single(capsys, tmp_path):
    code, out, _ = run(capsys, "verify", "--lemma", "arcsin_cubic")
    assert code == 0
    doc = json.loads(out)
    assert doc["status"] == "PASS"
    assert doc["certificates"][0]["lemma_id"] == "arcsin_cubic"


def test_verify_all_to_file(capsys, tmp_path):
    path = tmp_path / "certs.json"
    code, out, _ = run(capsys, "verify", "--all", "--output", str(path))
    assert code == 0
    assert out.count("PASS") == 7
    doc = json.loads(path.read_text())
    assert doc["status"] == "PASS" and doc["max_depth"] == 40


def test_depth_precedence(tmp_path, monkeypatch):
    cfg_file = tmp_path / "syl.cfg"
    cfg_file.write_text("# defaults\nmax_depth = 20\nquad_error = 1e-10\n")
    parser = build_parser()
    args = parser.parse_args(["verify", "--all", "--config", str(cfg_file)])
    assert resolve_config(args, environ={}).max_depth == 20
    assert resolve_config(args, environ={}).quad_error == 1e-10
    assert resolve_config(args, environ={"SYL_MAX_DEPTH": "30"}).max_depth == 30
    args = parser.parse_args(["verify", "--all", "--config", str(cfg_file), "--max-depth", "50"])
    assert resolve_config(args, environ={"SYL_MAX_DEPTH": "30"}).max_depth == 50


def test_env_depth_out_of_range(capsys, monkeypatch):
    monkeypatch.setenv("SYL_MAX_DEPTH", "99")
    code, _, err = run(capsys, "verify", "--lemma", "arcsin_cubic")
    assert code == 2 and "[8, 60]" in err


def test_bad_config(tmp_path, capsys):
    p = tmp_path / "bad.cfg"
    p.write_text("colour = blue\n")
    code, _, err = run(capsys, "alpha", "--eps", "0.5", "--config", str(p))
    assert code == 2 and "bad.cfg:1" in err
    with pytest.raises(Exception):
        load_config(tmp_path / "missing.cfg")


def test_run_config_validation():
    with pytest.raises(DomainError):
        RunConfig(quad_error=0.0)
    with pytest.raises(DomainError):
        RunConfig(max_depth=61)
    with pytest.raises(DomainError):
        RunConfig(output_format="xml")


def test_constants(capsys):
    code, out, _ = run(capsys, "constants", "--n", "4", "--k", "2")
    d = json.loads(out)
    assert d["lambda_k"] == pytest.approx(0.40824829046386)
    assert d["sigma_k_sphere"] == 1.5
    assert d["gamma_kn"] == pytest.approx(0.61237243569579)
    code, out, _ = run(capsys, "constants", "--n", "3", "--k", "2")
    assert json.loads(out)["gvw_ricci_coefficient"] == pytest.approx(1 / 6)


def test_lambda_bound(capsys):
    code, out, _ = run(capsys, "lambda-bound-4d", "--chi", "3", "--tau", "1")
    d = json.loads(out)
    assert d["bound"] == pytest.approx(2 * math.pi**2) and d["subcritical"] is True


def test_curvature(capsys):
    code, out, _ = run(capsys, "curvature", "--unit-sphere", "3")
    d = json.loads(out)
    assert d["schouten_eigenvalues"] == pytest.approx([0.5, 0.5, 0.5], abs=1e-15)
    assert d["max_admissible_k"] == 3
    code, out, _ = run(capsys, "curvature", "--ricci-eigs", "2,2,2,2")
    assert json.loads(out)["n"] == 4
    code, out, _ = run(capsys, "curvature", "--ricci-lower", "2", "--dim", "3")
    assert json.loads(out)["volume_bound"] == pytest.approx(2 * math.pi**2)


def test_curves(capsys):
    code, out, _ = run(capsys, "curves", "--eps", "0.5", "--steps", "11")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 11
    first, last = rows[0], rows[-1]
    assert float(first["I1"]) == pytest.approx(1 / math.sqrt(2), abs=1e-12)
    assert float(last["sum"]) == 1.0
    for r in rows:
        assert float(r["sum"]) <= 1.0 + 1e-12
        assert float(r["I1"]) == pytest.approx(float(r["I1_closed_form"]), abs=1e-12)
    code, out, _ = run(capsys, "curves", "--eps", "0.3", "--steps", "5", "--format", "json")
    assert "H" not in json.loads(out)[0]


def test_linearized_demo(capsys):
    code, out, _ = run(capsys, "linearized-demo")
    d = json.loads(out)
    assert d["residual_max"] < 1e-8 and d["error_vs_continuum"] < 1e-12
    code, out, _ = run(capsys, "linearized-demo", "--mode", "0", "--constant", "2.0")
    assert json.loads(out)["mean_h"] == pytest.approx(1.5)


def test_epsilon0_format_csv(capsys, monkeypatch):
    monkeypatch.setattr(bf, "epsilon0", lambda **kw: bf.Epsilon0Result(0.13, (0.12, 0.14), 3))
    code, out, _ = run(capsys, "epsilon0", "--format", "csv")
    header, row = out.strip().splitlines()
    assert header == "estimate,bracket_lo,bracket_hi,width,iterations"
    assert row.startswith("0.13,0.12,0.14,")


@pytest.mark.parametrize("argv", [
    ("constants", "--n", "4", "--k", "2"),
    ("curvature", "--unit-sphere", "3"),
    ("lambda-bound-4d", "--chi", "3", "--tau", "1"),
    ("linearized-demo",),
])
def test_records_honour_csv(capsys, argv):
    code, out, _ = run(capsys, *argv, "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    if argv[0] == "constants":
        assert rows[0]["gvw_ricci_coefficient"] == ""
    if argv[0] == "curvature":
        assert rows[0]["schouten_eigenvalues"] == "0.5;0.5;0.5"
    if argv[0] == "lambda-bound-4d":
        assert rows[0]["subcritical"] == "true"
