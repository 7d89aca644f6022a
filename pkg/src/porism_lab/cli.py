"""Command-line front end.

    porism-lab verify [--rho F | --R F --r F] [--t-samples N] [--tol F]
                      [--seed N] [--out DIR]
    porism-lab sweep  --quantities LIST [...]
    porism-lab figure --figure ID [...]

Exit codes: 0 pass, 1 verdict failure, 2 usage or configuration error.
Options may also come from a plain-text key=value file via --config;
explicit flags win over file values.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import figures as _figures
from . import report as _report
from .errors import GeometryError


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="porism-lab",
        description="Sweep, verify and draw the poristic triangle family "
                    "and its billiard bridge.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--config", help="key=value file with defaults for the flags below")
        p.add_argument("--rho", type=float, help="inradius/circumradius ratio in (0, 1/2]")
        p.add_argument("--R", type=float, help="circumradius (with --r)")
        p.add_argument("--r", type=float, help="inradius (with --R)")
        p.add_argument("--t-samples", type=int, default=None, help="sweep grid size (default 720)")
        p.add_argument("--tol", type=float, default=None, help="invariance tolerance (default 1e-9)")
        p.add_argument("--angle-tol", type=float, default=None,
                       help="tolerance for angle and reflection checks (default 1e-8)")
        p.add_argument("--seed", type=int, default=None, help="seed for randomized property rows")
        p.add_argument("--out", default=None, help="output directory (default .)")

    p_verify = sub.add_parser("verify", help="run the full invariance suite")
    add_common(p_verify)
    p_verify.add_argument("--inject-perturbation", type=float, default=0.0,
                          help=argparse.SUPPRESS)  # mutation sanity hook

    p_sweep = sub.add_parser("sweep", help="write per-sample quantities as CSV")
    add_common(p_sweep)
    p_sweep.add_argument("--quantities", default="",
                         help="comma-separated quantity names (see docs); empty for header only")

    p_figure = sub.add_parser("figure", help="render one SVG figure")
    add_common(p_figure)
    p_figure.add_argument("--figure", required=True,
                          help=f"figure id, one of: {', '.join(_figures.FIGURE_IDS)}")
    return parser


def _read_config_file(path: str) -> dict[str, str]:
    values = {}
    for raw in Path(path).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise _report.ConfigError(f"bad config line (expected key=value): {raw!r}")
        key, _, val = line.partition("=")
        values[key.strip()] = val.strip()
    return values


_FILE_KEYS = {
    "rho": float, "R": float, "r": float, "t_samples": int, "tol": float,
    "angle_tol": float, "seed": int, "out": str,
}


def _resolve_config(args) -> _report.LabConfig:
    file_vals: dict = {}
    if args.config:
        raw = _read_config_file(args.config)
        for key, val in raw.items():
            if key not in _FILE_KEYS:
                raise _report.ConfigError(f"unknown config key {key!r}")
            file_vals[key] = _FILE_KEYS[key](val)

    def pick(flag_val, key, default):
        if flag_val is not None:
            return flag_val
        return file_vals.get(key, default)

    rho = pick(args.rho, "rho", None)
    R = pick(args.R, "R", None)
    r = pick(args.r, "r", None)
    if rho is not None and (R is not None or r is not None):
        raise _report.ConfigError("give either --rho or the --R/--r pair, not both")
    if rho is not None:
        if not 0 < rho <= 0.5:
            raise _report.ConfigError(f"rho = {rho} outside (0, 1/2]")
        R, r = 1.0, rho
    elif R is not None or r is not None:
        if R is None or r is None:
            raise _report.ConfigError("--R and --r must be given together")
    else:
        R, r = 1.0, 0.36266

    lab = _report.LabConfig(
        R=R, r=r,
        t_samples=pick(args.t_samples, "t_samples", 720),
        tolerance=pick(args.tol, "tol", 1e-9),
        angle_tolerance=pick(args.angle_tol, "angle_tol", 1e-8),
        seed=pick(args.seed, "seed", 0),
        output_dir=pick(args.out, "out", "."),
        perturb=getattr(args, "inject_perturbation", 0.0),
    )
    lab.validated()
    lab.poristic()  # fail fast on an invalid circle pair
    return lab


def _cmd_verify(lab: _report.LabConfig) -> int:
    result = _report.run_verify(lab)
    out = Path(lab.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(_report.verify_report_json(result))
    (out / "report.csv").write_text(_report.verify_report_csv(result))
    for row in result.reports:
        marker = "PASS" if row.status == "pass" else "FAIL"
        detail = f"verdict={row.verdict} spread_rel={row.spread_rel:.3e} max={row.max:.3e}"
        if row.expected is not None and not math.isnan(row.mean):
            detail += f" mean={row.mean:.12g} expected={row.expected:.12g}"
        print(f"[{marker}] {row.quantity}: {detail}")
    n_pass = sum(1 for r in result.reports if r.status == "pass")
    print(f"{n_pass}/{len(result.reports)} checks passed "
          f"({len(result.skipped)} skipped samples, "
          f"max circumconic condition {result.max_condition:.3e})")
    print(f"reports written to {out / 'report.json'} and {out / 'report.csv'}")
    return 0 if result.passed else 1


def _cmd_sweep(lab: _report.LabConfig, quantities_arg: str) -> int:
    names = [q for q in (s.strip() for s in quantities_arg.split(",")) if q]
    out = Path(lab.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    if not names:
        (out / "sweep.csv").write_text("t\n")
        print(f"empty quantity list: header-only CSV at {out / 'sweep.csv'}")
        return 0
    header, rows, skips = _report.run_sweep(lab, names)
    (out / "sweep.csv").write_text(_report.format_csv(header, rows))
    if skips:
        lines = [f"t={entry['t']:.17g}: {entry['reason']}" for entry in skips]
        (out / "sweep_skips.txt").write_text("\n".join(lines) + "\n")
    print(f"{len(rows)} rows x {len(names)} quantities -> {out / 'sweep.csv'}"
          + (f" ({len(skips)} skipped cells)" if skips else ""))
    return 0


def _cmd_figure(lab: _report.LabConfig, figure_id: str) -> int:
    svg = _figures.render_figure(figure_id, lab)
    out = Path(lab.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{figure_id}.svg"
    path.write_text(svg)
    print(f"figure written to {path}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        lab = _resolve_config(args)
        if args.command == "verify":
            return _cmd_verify(lab)
        if args.command == "sweep":
            return _cmd_sweep(lab, args.quantities)
        return _cmd_figure(lab, args.figure)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
