"""Command-line interface.

Exit codes: 0 success, 1 domain error (message on stderr), 2 usage error
(argparse).  Default output is human text; --format json emits the same
envelope the HTTP service returns.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import secrets
import sys
from typing import Optional

from .errors import FprkitError
from .panel import (
    CURVE_CSV_COLUMNS,
    build_curve,
    build_interpret,
    build_prior_needed,
    build_simulate,
    curve_csv_rows,
)


def _add_design_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--n", type=int, default=16, help="sample size per group (default 16)")
    sp.add_argument(
        "--effect-size",
        type=float,
        default=1.0,
        help="true effect size under H1, in SD units (default 1.0)",
    )
    sp.add_argument("--alpha", type=float, default=0.05, help="significance threshold (default 0.05)")


def _add_format_flag(sp: argparse.ArgumentParser, choices=("text", "json")) -> None:
    sp.add_argument("--format", choices=choices, default=choices[0], help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fprkit",
        description="False positive risk toolkit for two-sample t-test p-values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("interpret", help="full evidence panel for an observed p-value")
    sp.add_argument("--p", type=float, required=True, help="observed two-sided p-value")
    _add_design_flags(sp)
    sp.add_argument("--prior", type=float, default=None, help="prior P(H1) for an FPR-at-prior row")
    _add_format_flag(sp)

    sp = sub.add_parser("prior-needed", help="reverse Bayes: prior required for a target FPR")
    sp.add_argument("--p", type=float, required=True)
    _add_design_flags(sp)
    sp.add_argument("--target-fpr", type=float, required=True)
    sp.add_argument("--approach", choices=("p_equals", "p_less_than"), default="p_equals")
    _add_format_flag(sp)

    sp = sub.add_parser("curve", help="sweep prior, p, or n and tabulate the measures")
    sp.add_argument("--sweep", choices=("prior", "p", "n"), required=True)
    sp.add_argument(
        "--grid",
        required=True,
        help="grid spec: start:stop:steps (inclusive) or comma-separated values",
    )
    _add_design_flags(sp)
    sp.add_argument("--p", type=float, default=0.05, help="fixed p for prior/n sweeps")
    sp.add_argument("--prior", type=float, default=0.5, help="fixed prior for p/n sweeps")
    _add_format_flag(sp, choices=("text", "json", "csv"))

    sp = sub.add_parser("simulate", help="seeded Monte-Carlo replication of t-tests")
    _add_design_flags(sp)
    sp.add_argument("--prior", type=float, default=0.5, help="fraction of experiments with a real effect")
    sp.add_argument("--n-experiments", type=int, default=100_000)
    sp.add_argument("--window-lo", type=float, default=None, help="p window low edge (default alpha-0.005)")
    sp.add_argument("--window-hi", type=float, default=None, help="p window high edge (default alpha)")
    sp.add_argument("--seed", type=int, default=None, help="64-bit seed; generated and echoed if omitted")
    sp.add_argument("--shards", type=int, default=1, help="worker threads (FPRKIT_THREADS caps this)")
    _add_format_flag(sp)

    sp = sub.add_parser("serve", help="run the JSON HTTP service")
    sp.add_argument("--host", default="127.0.0.1")
    sp.add_argument("--port", type=int, default=8000)
    sp.add_argument("--cors-origin", default="*")
    sp.add_argument("--max-sim-experiments", type=int, default=10_000_000)

    return parser


def parse_grid(spec: str) -> list[float]:
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) != 3:
            raise FprkitError(f"grid spec must be start:stop:steps, got {spec!r}")
        start, stop, steps = float(parts[0]), float(parts[1]), int(parts[2])
        if steps < 1:
            raise FprkitError(f"grid steps must be >= 1, got {steps}")
        if steps == 1:
            return [start]
        step = (stop - start) / (steps - 1)
        return [start + i * step for i in range(steps)]
    try:
        return [float(v) for v in spec.split(",") if v.strip() != ""]
    except ValueError as exc:
        raise FprkitError(f"bad grid value in {spec!r}: {exc}") from None


def _fmt(value, digits=6) -> str:
    if value is None:
        return "-"
    return f"{value:.{digits}g}"


def _render_interpret(env: dict) -> str:
    r = env["results"]
    d, ev = r["design"], r["evidence"]
    lines = [
        f"fprkit {env['tool_version']} - false positive risk panel",
        f"inputs   p={_fmt(ev['p_value'])}  n/group={d['n_per_group']}  "
        f"effect={_fmt(d['effect_size_sd'])} SD  alpha={_fmt(d['alpha'])}",
        f"derived  df={_fmt(d['df'])}  ncp={_fmt(d['ncp'])}  t_obs={_fmt(ev['t_obs'])}  "
        f"power={_fmt(r['power'])}",
        "",
        "likelihood ratios L10 (H1 vs H0)",
        f"  p-equals, fixed effect    {_fmt(r['l10_pequals'])}",
        f"  p-equals, ML alternative  {_fmt(r['l10_ml'])}",
        f"  p-less-than (thr = p)     {_fmt(r['l10_plessthan'])}",
        "",
        "false positive risk",
        f"  FPR50 (prior 0.5)         p-equals {_fmt(r['fpr50_pequals'])}   "
        f"p-less-than {_fmt(r['fpr50_plessthan'])}",
    ]
    if r["fpr_at_prior_pequals"] is not None:
        prior = env["inputs_echo"]["prior_h1"]
        lines.append(
            f"  FPR at prior {_fmt(prior)}        p-equals {_fmt(r['fpr_at_prior_pequals'])}   "
            f"p-less-than {_fmt(r['fpr_at_prior_plessthan'])}"
        )
    lines.append(
        f"  prior needed for FPR {_fmt(r['prior_needed_target_fpr'])}: "
        f"p-equals {_fmt(r['prior_needed_pequals'])}   "
        f"p-less-than {_fmt(r['prior_needed_plessthan'])}"
    )
    cal = r["calibration"]
    if cal is not None:
        lines.append(
            f"calibration (-e p ln p bound)  BF10 {_fmt(cal['bf10'])}  FPR50 {_fmt(cal['fpr50'])}"
        )
    for w in env["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _render_prior_needed(env: dict) -> str:
    r = env["results"]
    return "\n".join(
        [
            f"fprkit {env['tool_version']} - reverse Bayes",
            f"approach {r['approach']}   L10 {_fmt(r['l10'])}",
            f"prior P(H1) needed for FPR {_fmt(r['target_fpr'])}: {_fmt(r['prior_needed'])}",
        ]
    )


def _render_curve(env: dict) -> str:
    header = "  ".join(f"{c:>16s}" for c in CURVE_CSV_COLUMNS)
    lines = [header]
    for row in curve_csv_rows(env):
        lines.append("  ".join(f"{_fmt(v):>16s}" for v in row))
    for w in env["warnings"]:
        lines.append(f"warning: {w}")
    return "\n".join(lines)


def _render_simulate(env: dict) -> str:
    r = env["results"]
    o = r["outcome"]
    lines = [
        f"fprkit {env['tool_version']} - simulation "
        f"({env['inputs_echo']['n_experiments']} experiments, seed {r['rng']['seed']}, "
        f"{r['rng']['generator']})",
        f"counts   H0 {o['n_h0']}  H1 {o['n_h1']}  sig|H0 {o['n_sig_h0']}  sig|H1 {o['n_sig_h1']}  "
        f"window|H0 {o['n_window_h0']}  window|H1 {o['n_window_h1']}",
        "",
        f"{'measure':>14s} {'empirical':>12s} {'analytic':>12s} {'z':>8s}  within 3 SE?",
    ]
    for name, comp in r["comparison"].items():
        if comp is None:
            lines.append(f"{name:>14s} {'-':>12s} {'-':>12s} {'-':>8s}  undefined (zero denominator)")
        else:
            verdict = "yes" if comp["within_3se"] else "NO"
            lines.append(
                f"{name:>14s} {_fmt(comp['empirical']):>12s} {_fmt(comp['analytic']):>12s} "
                f"{_fmt(comp['z'], 3):>8s}  {verdict}"
            )
    return "\n".join(lines)


def _emit(env: dict, fmt: str, renderer) -> None:
    if fmt == "json":
        print(json.dumps(env, indent=2))
    else:
        print(renderer(env))


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "interpret":
            env = build_interpret(
                p=args.p,
                n_per_group=args.n,
                effect_size_sd=args.effect_size,
                alpha=args.alpha,
                prior_h1=args.prior,
            )
            _emit(env, args.format, _render_interpret)
        elif args.command == "prior-needed":
            env = build_prior_needed(
                p=args.p,
                n_per_group=args.n,
                effect_size_sd=args.effect_size,
                alpha=args.alpha,
                target_fpr=args.target_fpr,
                approach=args.approach,
            )
            _emit(env, args.format, _render_prior_needed)
        elif args.command == "curve":
            env = build_curve(
                sweep=args.sweep,
                grid=parse_grid(args.grid),
                n_per_group=args.n,
                effect_size_sd=args.effect_size,
                alpha=args.alpha,
                p=args.p,
                prior_h1=args.prior,
            )
            if args.format == "csv":
                buf = io.StringIO()
                writer = csv.writer(buf)
                writer.writerow(CURVE_CSV_COLUMNS)
                for row in curve_csv_rows(env):
                    writer.writerow(["" if v is None else repr(v) for v in row])
                sys.stdout.write(buf.getvalue())
                for w in env["warnings"]:
                    print(f"warning: {w}", file=sys.stderr)
            else:
                _emit(env, args.format, _render_curve)
        elif args.command == "simulate":
            seed = args.seed if args.seed is not None else secrets.randbits(63)
            window = None
            if (args.window_lo is None) != (args.window_hi is None):
                raise FprkitError("--window-lo and --window-hi must be given together")
            if args.window_lo is not None:
                window = (args.window_lo, args.window_hi)
            env = build_simulate(
                n_per_group=args.n,
                effect_size_sd=args.effect_size,
                alpha=args.alpha,
                prior_h1=args.prior,
                n_experiments=args.n_experiments,
                p_window=window,
                seed=seed,
                n_shards=args.shards,
            )
            _emit(env, args.format, _render_simulate)
        elif args.command == "serve":
            from .service import run

            run(
                host=args.host,
                port=args.port,
                cors_origin=args.cors_origin,
                max_sim_experiments=args.max_sim_experiments,
            )
        else:  # pragma: no cover - argparse enforces the choices
            parser.error(f"unknown command {args.command!r}")
    except FprkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
