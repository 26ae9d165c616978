"""``syl`` command-line front end.

Every subcommand prints JSON (or CSV where it makes sense) with floats in
shortest round-trip form, so parsing the output reproduces the values
bit-exactly.  Exit codes: 0 success, 1 certificate failure, 2 usage or
domain error.

Tolerances come from, in increasing priority: built-in defaults, a
``--config`` file of ``key = value`` lines, the ``SYL_MAX_DEPTH`` environment
variable (depth only), and command-line flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from . import bray_football as bf
from .certificates import LEMMA_IDS, verify_lemma
from .certificates import functions as fn
from .certificates.engine import DEFAULT_MAX_DEPTH, FloatKit, check_depth
from .curvature import (
    CurvaturePoint,
    PeriodicField,
    apply_linearized,
    gvw_ricci_coefficient,
    lambda_bound_4d,
    myers_bishop_bound,
    schouten,
    schouten_spectrum,
    solve_linearized_periodic,
    sphere_volume,
)
from .errors import ConeError, DomainError, NumericalError
from .symm_poly import cone_report, gamma_kn, lambda_k, sigma_k_sphere

__all__ = ["RunConfig", "load_config", "build_parser", "main"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("json", "csv")
SWEEP_HEADER = ("epsilon", "alpha", "z_star", "quad_error")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str = ""
    quad_error: float = bf.DEFAULT_QUAD_TOL
    bisection_tol: float = 1e-4
    max_depth: int = DEFAULT_MAX_DEPTH
    output_format: str | None = None  # None: csv for tables, json otherwise
    output_path: Path | None = None

    def __post_init__(self) -> None:
        if not (self.quad_error > 0.0 and self.bisection_tol > 0.0):
            raise DomainError("tolerances must be positive")
        check_depth(self.max_depth)
        if self.output_format is not None and self.output_format not in FORMATS:
            raise DomainError(f"format must be one of {FORMATS}, got {self.output_format!r}")


_CONFIG_KEYS = {
    "quad_error": float,
    "bisection_tol": float,
    "max_depth": int,
    "format": str,
    "output": Path,
}


def load_config(path: Path) -> dict[str, Any]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out: dict[str, Any] = {}
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or key not in _CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: expected one of {sorted(_CONFIG_KEYS)} as key = value")
        try:
            out[key] = _CONFIG_KEYS[key](value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: bad value {value!r} for {key}") from None
    return out


def resolve_config(args: argparse.Namespace, environ=os.environ) -> RunConfig:
    cfg = RunConfig(command=args.command)
    if args.config is not None:
        file_values = load_config(args.config)
        renamed = {"format": "output_format", "output": "output_path"}
        cfg = replace(cfg, **{renamed.get(k, k): v for k, v in file_values.items()})
    env_depth = environ.get("SYL_MAX_DEPTH")
    if env_depth:
        try:
            depth = int(env_depth)
        except ValueError:
            raise UsageError(f"SYL_MAX_DEPTH must be an integer, got {env_depth!r}") from None
        cfg = replace(cfg, max_depth=depth)
    flags = {
        "quad_error": args.quad_tol,
        "bisection_tol": getattr(args, "tol", None),
        "max_depth": args.max_depth,
        "output_format": args.format,
        "output_path": args.output,
    }
    return replace(cfg, **{k: v for k, v in flags.items() if v is not None})


# -- output -------------------------------------------------------------------


def _fmt(v: Any) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ";".join(_fmt(x) for x in v)
    return str(v)


def to_csv(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def to_json(obj: Any) -> str:
    # json.dumps already writes floats with repr (shortest round trip)
    return json.dumps(obj, indent=2, allow_nan=False) + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output_path is None:
        sys.stdout.write(text)
    else:
        cfg.output_path.write_text(text)


def _table(cfg: RunConfig, header: Sequence[str], rows: list[Sequence[Any]]) -> str:
    if (cfg.output_format or "csv") == "csv":
        return to_csv(header, rows)
    return to_json([dict(zip(header, r)) for r in rows])


def _record(cfg: RunConfig, record: dict[str, Any]) -> str:
    if cfg.output_format == "csv":
        return to_csv(list(record), [list(record.values())])
    return to_json(record)


# -- commands -------------------------------------------------------------------


def _alpha_row(ev: bf.AlphaEvaluation) -> list[Any]:
    return [ev.epsilon, ev.alpha, ev.z_star, ev.quad_error]


def cmd_alpha(args, cfg: RunConfig) -> int:
    ev = bf.alpha(args.eps, tol=cfg.quad_error)
    record = dict(zip(SWEEP_HEADER, _alpha_row(ev)))
    record["n_evals"] = ev.n_evals
    _emit(cfg, _record(cfg, record))
    return EXIT_OK


def cmd_alpha_sweep(args, cfg: RunConfig) -> int:
    if not 0.0 < args.eps_min < args.eps_max <= 1.0:
        raise DomainError("need 0 < eps_min < eps_max <= 1")
    if args.steps < 2:
        raise DomainError("steps must be at least 2")
    # grid in exact rationals from the decimal the user typed, then rounded once
    lo, hi = Fraction(repr(args.eps_min)), Fraction(repr(args.eps_max))
    last = args.steps - 1
    grid = [float(lo + (hi - lo) * i / last) for i in range(args.steps)]
    rows = [_alpha_row(bf.alpha(e, tol=cfg.quad_error)) for e in grid]
    _emit(cfg, _table(cfg, SWEEP_HEADER, rows))
    return EXIT_OK


def cmd_epsilon0(args, cfg: RunConfig) -> int:
    res = bf.epsilon0(tol=cfg.bisection_tol, bracket=(args.lo, args.hi), quad_tol=cfg.quad_error)
    record = {
        "estimate": res.estimate,
        "bracket_lo": res.bracket[0],
        "bracket_hi": res.bracket[1],
        "width": res.width,
        "iterations": res.iterations,
    }
    _emit(cfg, _record(cfg, record))
    return EXIT_OK


def cmd_verify(args, cfg: RunConfig) -> int:
    ids = list(LEMMA_IDS) if args.all else [args.lemma]
    for lemma_id in ids:
        if lemma_id not in LEMMA_IDS:
            raise UsageError(f"unknown lemma {lemma_id!r}; known: {', '.join(LEMMA_IDS)}")
    certs = [verify_lemma(i, cfg.max_depth) for i in ids]
    ok = all(c.passed for c in certs)
    doc = {
        "status": "PASS" if ok else "FAIL",
        "max_depth": cfg.max_depth,
        "certificates": [c.to_dict() for c in certs],
    }
    if cfg.output_path is None:
        sys.stdout.write(to_json(doc))
    else:
        cfg.output_path.write_text(to_json(doc))
        for c in certs:
            sys.stdout.write(f"{c.lemma_id}: {c.status}\n")
    for c in certs:
        for line in c.failures():
            sys.stderr.write(f"FAIL {line}\n")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_curves(args, cfg: RunConfig) -> int:
    """I1, I2 and their sum over the z-range; at eps = 1/2 also phi, the closed form and H."""
    if args.steps < 2:
        raise DomainError("steps must be at least 2")
    eps = args.eps
    half = eps == 0.5
    z_min, z_max = bf.z_range(eps)
    header = ["z", "I1", "I2", "sum"] + (["phi", "I1_closed_form", "H"] if half else [])
    rows = []
    for z in np.linspace(z_min, z_max, args.steps):
        z = min(max(float(z), z_min), z_max)
        i1 = bf.I1(z, eps, cfg.quad_error) if z < bf.FOUR_PI else 0.0
        i2 = bf.I2(z, eps, cfg.quad_error) if z < bf.FOUR_PI else 1.0
        row: list[Any] = [z, i1, i2, i1 + i2]
        if half:
            phi = min(bf.phi_of_z(z), 1.0)
            row += [phi, bf.I1_closed_form(phi), fn.H(phi, FloatKit)]
        rows.append(row)
    _emit(cfg, _table(cfg, header, rows))
    return EXIT_OK


def cmd_constants(args, cfg: RunConfig) -> int:
    n, k = args.n, args.k
    record: dict[str, Any] = {
        "n": n,
        "k": k,
        "lambda_k": lambda_k(n, k),
        "sigma_k_sphere": sigma_k_sphere(n, k),
        "gamma_kn": gamma_kn(n, k),
        "sphere_volume": sphere_volume(n),
    }
    try:
        record["gvw_ricci_coefficient"] = gvw_ricci_coefficient(n, k)
    except DomainError:
        record["gvw_ricci_coefficient"] = None
    _emit(cfg, _record(cfg, record))
    return EXIT_OK


def _parse_floats(text: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated numbers, got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise DomainError("values must be finite")
    return vals


def cmd_curvature(args, cfg: RunConfig) -> int:
    if args.ricci_lower is not None:
        if args.dim is None:
            raise UsageError("--ricci-lower needs --dim")
        if not args.ricci_lower > 0.0:
            raise DomainError("ricci lower bound must be positive")
        diameter, volume = myers_bishop_bound(args.dim, args.ricci_lower)
        _emit(cfg, _record(cfg, {"n": args.dim, "ricci_lower": args.ricci_lower,
                            "diameter_bound": diameter, "volume_bound": volume}))
        return EXIT_OK
    if args.unit_sphere is not None:
        p = CurvaturePoint.unit_sphere(args.unit_sphere)
    else:
        eigs = _parse_floats(args.ricci_eigs)
        p = CurvaturePoint.from_ricci(np.eye(len(eigs)), np.diag(eigs))
    eigs = [float(v) for v in schouten_spectrum(schouten(p), p.g)]
    report = cone_report(eigs)
    _emit(cfg, _record(cfg, {
        "n": p.n,
        "scalar_curvature": p.R,
        "schouten_eigenvalues": eigs,
        "sigma": list(report.sigmas),
        "max_admissible_k": report.max_k,
    }))
    return EXIT_OK


def cmd_lambda_bound(args, cfg: RunConfig) -> int:
    b = lambda_bound_4d(args.chi, args.tau)
    _emit(cfg, _record(cfg, {
        "chi": args.chi,
        "tau": args.tau,
        "bound": b.value,
        "two_chi_plus_three_tau": b.two_chi_plus_three_tau,
        "subcritical": b.subcritical,
        "sphere_volume_4": sphere_volume(4),
    }))
    return EXIT_OK


def cmd_linearized_demo(args, cfg: RunConfig) -> int:
    """Solve with right-hand side ``c + cos(2 pi m x)`` and report residual and error."""
    if args.points < 4:
        raise DomainError("need at least 4 grid points")
    m, c = args.mode, args.constant
    f = PeriodicField.from_function(lambda x: c + np.cos(2.0 * math.pi * m * x), args.points)
    h = solve_linearized_periodic(f, args.n, args.k, args.laplacian)
    residual = float(np.max(np.abs(apply_linearized(h, args.n, args.k, args.laplacian).values - f.values)))
    g = gamma_kn(args.n, args.k)
    x = np.arange(args.points) / args.points
    if m == 0:
        exact = np.full_like(x, (c + 1.0) / 2.0)
    else:
        exact = c / 2.0 - np.cos(2.0 * math.pi * m * x) / (g * (2.0 * math.pi * m) ** 2)
    _emit(cfg, _record(cfg, {
        "points": args.points,
        "n": args.n,
        "k": args.k,
        "laplacian": args.laplacian,
        "gamma_kn": g,
        "residual_max": residual,
        "mean_h": h.mean(),
        "error_vs_continuum": float(np.max(np.abs(h.values - exact))),
    }))
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def _positive_int(text: str) -> int:
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=Path, help="key = value file of default tolerances")
    common.add_argument("--format", choices=FORMATS)
    common.add_argument("--output", type=Path, help="write results here instead of stdout")
    common.add_argument("--quad-tol", type=float, help="quadrature tolerance")
    common.add_argument("--max-depth", type=int, help="certificate subdivision depth (8..60)")

    parser = argparse.ArgumentParser(prog="syl", description="sigma_k volume bounds toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alpha", parents=[common], help="alpha(eps) and its maximizer")
    p.add_argument("--eps", type=float, required=True)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("alpha-sweep", parents=[common], help="alpha over a uniform eps grid (CSV)")
    p.add_argument("--eps-min", type=float, default=0.05)
    p.add_argument("--eps-max", type=float, default=0.95)
    p.add_argument("--steps", type=int, default=19)
    p.set_defaults(func=cmd_alpha_sweep)

    p = sub.add_parser("epsilon0", parents=[common], help="bisection estimate of eps0")
    p.add_argument("--tol", type=float, help="bracket width")
    p.add_argument("--lo", type=float, default=0.05)
    p.add_argument("--hi", type=float, default=0.5)
    p.set_defaults(func=cmd_epsilon0)

    p = sub.add_parser("verify", parents=[common], help="run interval certificates")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--all", action="store_true")
    which.add_argument("--lemma", metavar="ID", help=", ".join(LEMMA_IDS))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("curves", parents=[common], help="I1, I2, sum (and H at eps = 1/2) over z (CSV)")
    p.add_argument("--eps", type=float, default=0.5)
    p.add_argument("--steps", type=int, default=101)
    p.set_defaults(func=cmd_curves)

    p = sub.add_parser("constants", parents=[common], help="lambda_k, sigma_k(S^n), gamma_kn, ...")
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--k", type=_positive_int, required=True)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("curvature", parents=[common], help="Schouten spectrum or Myers/Bishop bounds")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--unit-sphere", type=int, metavar="N")
    src.add_argument("--ricci-eigs", metavar="R1,R2,...", help="Ricci eigenvalues in an orthonormal frame")
    src.add_argument("--ricci-lower", type=float, help="Ricci lower bound for Myers/Bishop")
    p.add_argument("--dim", type=int)
    p.set_defaults(func=cmd_curvature)

    p = sub.add_parser("lambda-bound-4d", parents=[common], help="4-d maximal volume bound")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--tau", type=int, required=True)
    p.set_defaults(func=cmd_lambda_bound)

    p = sub.add_parser("linearized-demo", parents=[common], help="periodic linearized solve on the unit circle")
    p.add_argument("--points", type=int, default=256)
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--mode", type=int, default=1)
    p.add_argument("--constant", type=float, default=0.0)
    p.add_argument("--laplacian", choices=("spectral", "fd2"), default="spectral")
    p.set_defaults(func=cmd_linearized_demo)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = resolve_config(args)
        return args.func(args, cfg)
    except (UsageError, DomainError, ConeError) as exc:
        sys.stderr.write(f"syl {args.command}: {exc}\n")
        return EXIT_USAGE
    except NumericalError as exc:
        sys.stderr.write(f"syl {args.command}: numerical failure: {exc}\n")
        return EXIT_FAIL
    except OSError as exc:
        sys.stderr.write(f"syl {args.command}: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
