"""Shared result assembly for the CLI and the JSON service.

Both surfaces call these builders, so their numbers are identical by
construction.  Every envelope echoes the fully-resolved inputs, making
any output re-runnable as-is.
"""

from __future__ import annotations

from typing import Optional

from . import __version__
from .errors import DomainError
from .fprcore import (
    Alternative,
    Approach,
    TestDesign,
    benjamin_berger_bf,
    curve,
    evidence_from_p,
    fpr,
    fpr50,
    lr_p_equals,
    lr_p_less_than,
    power,
    prior_for_fpr,
)
from .simlab import BLOCK_SIZE, RNG_NAME, SimConfig, SimOutcome, simulate_sharded

DEFAULT_TARGET_FPR = 0.05


def envelope(inputs_echo: dict, results: dict, warnings: list[str]) -> dict:
    return {
        "tool_version": __version__,
        "inputs_echo": inputs_echo,
        "results": results,
        "warnings": warnings,
    }


def _design_dict(design: TestDesign) -> dict:
    return {
        "n_per_group": design.n_per_group,
        "effect_size_sd": design.effect_size_sd,
        "alpha": design.alpha,
        "df": design.df(),
        "ncp": design.ncp(),
    }


def build_interpret(
    p: float,
    n_per_group: int = 16,
    effect_size_sd: float = 1.0,
    alpha: float = 0.05,
    prior_h1: Optional[float] = None,
) -> dict:
    """Full evidence panel for one observed p-value."""
    design = TestDesign(n_per_group=n_per_group, effect_size_sd=effect_size_sd, alpha=alpha)
    warnings: list[str] = []

    ev = evidence_from_p(design, p)
    lr_pe = lr_p_equals(design, ev)
    lr_ml = lr_p_equals(design, ev, Alternative.ML_ALTERNATIVE)
    lr_pl = lr_p_less_than(design, p)

    results = {
        "design": _design_dict(design),
        "evidence": {"p_value": ev.p_value, "t_obs": ev.t_obs},
        "power": power(design),
        "l10_pequals": lr_pe.l10,
        "l10_ml": lr_ml.l10,
        "l10_plessthan": lr_pl.l10,
        "fpr50_pequals": fpr50(lr_pe).fpr,
        "fpr50_plessthan": fpr50(lr_pl).fpr,
        "prior_needed_pequals": prior_for_fpr(lr_pe, DEFAULT_TARGET_FPR),
        "prior_needed_plessthan": prior_for_fpr(lr_pl, DEFAULT_TARGET_FPR),
        "prior_needed_target_fpr": DEFAULT_TARGET_FPR,
        "fpr_at_prior_pequals": None,
        "fpr_at_prior_plessthan": None,
        "calibration": None,
    }
    if prior_h1 is not None:
        results["fpr_at_prior_pequals"] = fpr(lr_pe, prior_h1).fpr
        results["fpr_at_prior_plessthan"] = fpr(lr_pl, prior_h1).fpr
    try:
        cal = benjamin_berger_bf(p)
        results["calibration"] = {"bf10": cal.bf10, "fpr50": cal.fpr50}
    except DomainError as exc:
        warnings.append(f"calibration: {exc}")

    echo = {
        "p": float(p),
        "n_per_group": design.n_per_group,
        "effect_size_sd": design.effect_size_sd,
        "alpha": design.alpha,
        "prior_h1": None if prior_h1 is None else float(prior_h1),
    }
    return envelope(echo, results, warnings)


def build_prior_needed(
    p: float,
    n_per_group: int = 16,
    effect_size_sd: float = 1.0,
    alpha: float = 0.05,
    target_fpr: float = DEFAULT_TARGET_FPR,
    approach: Approach = Approach.P_EQUALS,
) -> dict:
    design = TestDesign(n_per_group=n_per_group, effect_size_sd=effect_size_sd, alpha=alpha)
    approach = Approach(approach)
    if approach is Approach.P_EQUALS:
        lr = lr_p_equals(design, evidence_from_p(design, p))
    else:
        lr = lr_p_less_than(design, p)
    prior = prior_for_fpr(lr, target_fpr)
    results = {
        "design": _design_dict(design),
        "approach": approach.value,
        "l10": lr.l10,
        "target_fpr": float(target_fpr),
        "prior_needed": prior,
        "fpr_round_trip": fpr(lr, prior).fpr,
    }
    echo = {
        "p": float(p),
        "n_per_group": design.n_per_group,
        "effect_size_sd": design.effect_size_sd,
        "alpha": design.alpha,
        "target_fpr": float(target_fpr),
        "approach": approach.value,
    }
    return envelope(echo, results, [])


def build_curve(
    sweep: str,
    grid: list[float],
    n_per_group: int = 16,
    effect_size_sd: float = 1.0,
    alpha: float = 0.05,
    p: float = 0.05,
    prior_h1: float = 0.5,
) -> dict:
    design = TestDesign(n_per_group=n_per_group, effect_size_sd=effect_size_sd, alpha=alpha)
    rows = curve(design, sweep, grid, p=p, prior_h1=prior_h1)
    warnings = [
        f"row {i} ({sweep}={row.sweep_value:g}): {w}"
        for i, row in enumerate(rows)
        for w in row.warnings
    ]
    results = {
        "design": _design_dict(design),
        "sweep": str(sweep),
        "p": float(p),
        "prior_h1": float(prior_h1),
        "rows": [
            {
                "sweep_value": row.sweep_value,
                "l10_pequals": row.l10_pequals,
                "l10_plessthan": row.l10_plessthan,
                "fpr_pequals": row.fpr_pequals,
                "fpr_plessthan": row.fpr_plessthan,
                "calibration_fpr50": row.calibration_fpr50,
            }
            for row in rows
        ],
    }
    echo = {
        "sweep": str(sweep),
        "grid": [float(v) for v in grid],
        "n_per_group": design.n_per_group,
        "effect_size_sd": design.effect_size_sd,
        "alpha": design.alpha,
        "p": float(p),
        "prior_h1": float(prior_h1),
    }
    return envelope(echo, results, warnings)


# CSV columns are a pinned contract; the fpr50_* columns carry the FPR at the
# row's effective prior (see CurveRow).
CURVE_CSV_COLUMNS = (
    "sweep_value",
    "l10_pequals",
    "l10_plessthan",
    "fpr50_pequals",
    "fpr50_plessthan",
    "calibration_fpr50",
)


def curve_csv_rows(env: dict) -> list[list]:
    rows = []
    for row in env["results"]["rows"]:
        rows.append(
            [
                row["sweep_value"],
                row["l10_pequals"],
                row["l10_plessthan"],
                row["fpr_pequals"],
                row["fpr_plessthan"],
                row["calibration_fpr50"],
            ]
        )
    return rows


def _comparison(empirical: Optional[float], analytic: float, n_denominator: int) -> Optional[dict]:
    if empirical is None or n_denominator <= 0:
        return None
    se = (analytic * (1.0 - analytic) / n_denominator) ** 0.5
    z = None if se == 0.0 else (empirical - analytic) / se
    return {
        "empirical": empirical,
        "analytic": analytic,
        "se": se,
        "z": z,
        "within_3se": None if z is None else abs(z) <= 3.0,
    }


def build_simulate(
    n_per_group: int = 16,
    effect_size_sd: float = 1.0,
    alpha: float = 0.05,
    prior_h1: float = 0.5,
    n_experiments: int = 100_000,
    p_window: Optional[tuple[float, float]] = None,
    seed: int = 0,
    n_shards: int = 1,
) -> dict:
    design = TestDesign(n_per_group=n_per_group, effect_size_sd=effect_size_sd, alpha=alpha)
    if p_window is None:
        p_window = (max(alpha - 0.005, 1e-6), alpha)
    cfg = SimConfig(
        design=design,
        prior_h1=prior_h1,
        n_experiments=n_experiments,
        p_window=p_window,
        seed=seed,
    )
    outcome = simulate_sharded(cfg, n_shards)

    mid = 0.5 * (cfg.p_window[0] + cfg.p_window[1])
    lr_mid = lr_p_equals(design, evidence_from_p(design, mid))
    lr_thr = lr_p_less_than(design, alpha)
    analytic_window = fpr(lr_mid, cfg.prior_h1).fpr
    analytic_threshold = fpr(lr_thr, cfg.prior_h1).fpr
    analytic_power = power(design)

    results = {
        "design": _design_dict(design),
        "outcome": outcome.as_dict(),
        "rng": {"generator": RNG_NAME, "block_size": BLOCK_SIZE, "seed": cfg.seed},
        "comparison": {
            "window_fpr": _comparison(
                outcome.empirical_fpr_window,
                analytic_window,
                outcome.n_window_h0 + outcome.n_window_h1,
            ),
            "threshold_fpr": _comparison(
                outcome.empirical_fpr_threshold,
                analytic_threshold,
                outcome.n_sig_h0 + outcome.n_sig_h1,
            ),
            "power": _comparison(outcome.empirical_power, analytic_power, outcome.n_h1),
            "alpha": _comparison(outcome.empirical_alpha, design.alpha, outcome.n_h0),
        },
    }
    echo = {
        "n_per_group": design.n_per_group,
        "effect_size_sd": design.effect_size_sd,
        "alpha": design.alpha,
        "prior_h1": cfg.prior_h1,
        "n_experiments": cfg.n_experiments,
        "p_window": list(cfg.p_window),
        "seed": cfg.seed,
        "n_shards": int(n_shards),
    }
    return envelope(echo, results, [])
