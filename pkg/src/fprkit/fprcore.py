"""Evidence calculus for an observed two-sample t-test p-value.

Converts p into likelihood ratios (under the p-equals and p-less-than
interpretations), false positive risks for arbitrary priors, the
reverse-Bayes prior needed for a target FPR, and the -e*p*ln(p)
calibration bound.  Everything is a pure function of its arguments.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .errors import DomainError, InfeasibleError
from .tdist import CentralT, NoncentralT, cdf, pdf, quantile

__all__ = [
    "Approach",
    "Alternative",
    "TestDesign",
    "DEFAULT_DESIGN",
    "Evidence",
    "LikelihoodRatio",
    "FprResult",
    "Calibration",
    "Sweep",
    "CurveRow",
    "evidence_from_p",
    "power",
    "lr_p_equals",
    "lr_p_less_than",
    "fpr",
    "fpr50",
    "prior_for_fpr",
    "benjamin_berger_bf",
    "curve",
]


class Approach(str, enum.Enum):
    P_EQUALS = "p_equals"
    P_LESS_THAN = "p_less_than"


class Alternative(str, enum.Enum):
    FIXED_EFFECT = "fixed_effect"
    ML_ALTERNATIVE = "ml_alternative"


def _check_prob(value: float, name: str, *, open_ends: bool = True) -> float:
    v = float(value)
    ok = 0.0 < v < 1.0 if open_ends else 0.0 <= v <= 1.0
    if not math.isfinite(v) or not ok:
        bounds = "(0, 1)" if open_ends else "[0, 1]"
        raise DomainError(f"{name} must lie in {bounds}, got {value!r}")
    return v


@dataclass(frozen=True)
class TestDesign:
    """Two independent equal-size groups, unit-variance normal data.

    effect_size_sd is the true standardized difference under the
    alternative; alpha is used by the p-less-than interpretation and by
    power.
    """

    n_per_group: int = 16
    effect_size_sd: float = 1.0
    alpha: float = 0.05

    def __post_init__(self):
        n = self.n_per_group
        if not isinstance(n, int) or isinstance(n, bool) or n < 2:
            raise DomainError(f"n_per_group must be an integer >= 2, got {n!r}")
        es = float(self.effect_size_sd)
        if not math.isfinite(es) or es < 0.0:
            raise DomainError(f"effect_size_sd must be finite and >= 0, got {es!r}")
        object.__setattr__(self, "effect_size_sd", es)
        object.__setattr__(self, "alpha", _check_prob(self.alpha, "alpha"))

    def df(self) -> float:
        return 2.0 * (self.n_per_group - 1)

    def ncp(self) -> float:
        return self.effect_size_sd * math.sqrt(self.n_per_group / 2.0)


DEFAULT_DESIGN = TestDesign()


@dataclass(frozen=True)
class Evidence:
    """An observed two-sided p-value and the |t| that produced it."""

    p_value: float
    t_obs: float


@dataclass(frozen=True)
class LikelihoodRatio:
    l10: float
    approach: Approach
    alternative: Alternative


@dataclass(frozen=True)
class FprResult:
    fpr: float
    prior_h1: float
    lr: LikelihoodRatio


@dataclass(frozen=True)
class Calibration:
    bf10: float
    fpr50: float


def evidence_from_p(design: TestDesign, p: float) -> Evidence:
    """Invert a two-sided p-value to |t| under the design's null."""
    p = _check_prob(p, "p")
    t_obs = quantile(CentralT(design.df()), 1.0 - p / 2.0)
    return Evidence(p_value=p, t_obs=t_obs)


def power(design: TestDesign) -> float:
    """P(|T'| > t_crit) with T' noncentral at the design's ncp."""
    t_crit = quantile(CentralT(design.df()), 1.0 - design.alpha / 2.0)
    alt = NoncentralT(design.df(), design.ncp())
    return float((1.0 - cdf(alt, t_crit)) + cdf(alt, -t_crit))


def lr_p_equals(
    design: TestDesign,
    ev: Evidence,
    alternative: Alternative = Alternative.FIXED_EFFECT,
) -> LikelihoodRatio:
    """Likelihood ratio from the density ordinates at the observed |t|.

    The numerator averages the alternative's density over +-t_obs; the
    denominator is the matching two-sided null ordinate.  Under the
    ml_alternative the noncentrality is the observed t itself (the
    standardized observed effect d = t*sqrt(2/n) has ncp = d*sqrt(n/2) = t),
    and the design's effect_size_sd is ignored.
    """
    alternative = Alternative(alternative)
    ncp = ev.t_obs if alternative is Alternative.ML_ALTERNATIVE else design.ncp()
    alt = NoncentralT(design.df(), ncp)
    null = CentralT(design.df())
    num = pdf(alt, ev.t_obs) + pdf(alt, -ev.t_obs)
    den = 2.0 * pdf(null, ev.t_obs)
    return LikelihoodRatio(l10=num / den, approach=Approach.P_EQUALS, alternative=alternative)


def lr_p_less_than(design: TestDesign, p_threshold: float) -> LikelihoodRatio:
    """Likelihood ratio from tail areas: power at the threshold over the threshold."""
    p_threshold = _check_prob(p_threshold, "p_threshold")
    pw = power(replace(design, alpha=p_threshold))
    return LikelihoodRatio(
        l10=pw / p_threshold,
        approach=Approach.P_LESS_THAN,
        alternative=Alternative.FIXED_EFFECT,
    )


def fpr(lr: LikelihoodRatio, prior_h1: float) -> FprResult:
    """Posterior probability of the null given a positive claim, by Bayes."""
    pi = _check_prob(prior_h1, "prior_h1", open_ends=False)
    if pi == 1.0:
        value = 0.0
    elif pi == 0.0:
        value = 1.0
    else:
        value = (1.0 - pi) / ((1.0 - pi) + pi * lr.l10)
    return FprResult(fpr=value, prior_h1=pi, lr=lr)


def fpr50(lr: LikelihoodRatio) -> FprResult:
    """FPR at prior odds 1: 1 / (1 + l10)."""
    return fpr(lr, 0.5)


def prior_for_fpr(lr: LikelihoodRatio, target_fpr: float) -> float:
    """Reverse Bayes: the prior P(H1) that makes the FPR equal the target."""
    target = _check_prob(target_fpr, "target_fpr")
    if lr.l10 <= 0.0:
        raise InfeasibleError(
            f"no prior below 1 can reach FPR {target} when l10 = {lr.l10}"
        )
    return (1.0 - target) / ((1.0 - target) + target * lr.l10)


def benjamin_berger_bf(p: float) -> Calibration:
    """Maximum Bayes factor bound 1 / (-e * p * ln p), valid for 0 < p <= 1/e."""
    pv = float(p)
    if not math.isfinite(pv) or not 0.0 < pv <= 1.0 / math.e:
        raise DomainError(
            f"the calibration bound is valid for p in (0, 1/e) ~ (0, 0.3679); got {p!r}"
        )
    if pv == 1.0 / math.e:
        bf10 = 1.0  # boundary value is 1 by algebra; avoid float round-off
    else:
        bf10 = 1.0 / (-math.e * pv * math.log(pv))
    return Calibration(bf10=bf10, fpr50=1.0 / (1.0 + bf10))


# ---------------------------------------------------------------------------
# parameter sweeps


class Sweep(str, enum.Enum):
    PRIOR = "prior"
    P = "p"
    N = "n"


@dataclass(frozen=True)
class CurveRow:
    """One grid point of a sweep.

    fpr_pequals / fpr_plessthan are evaluated at the row's effective prior:
    the swept value for a prior sweep, otherwise the fixed prior (0.5 by
    default, where they coincide with FPR50).  Cells are None when that
    cell's inputs fall outside its domain; the reason lands in warnings.
    """

    sweep_value: float
    l10_pequals: Optional[float] = None
    l10_plessthan: Optional[float] = None
    fpr_pequals: Optional[float] = None
    fpr_plessthan: Optional[float] = None
    calibration_fpr50: Optional[float] = None
    warnings: tuple[str, ...] = ()


def _curve_row(design: TestDesign, p: float, prior: float, value: float) -> CurveRow:
    warnings: list[str] = []
    l10_pe = l10_pl = f_pe = f_pl = cal = None
    try:
        ev = evidence_from_p(design, p)
        lr_pe = lr_p_equals(design, ev)
        lr_pl = lr_p_less_than(design, p)
        l10_pe, l10_pl = lr_pe.l10, lr_pl.l10
        f_pe = fpr(lr_pe, prior).fpr
        f_pl = fpr(lr_pl, prior).fpr
    except DomainError as exc:
        warnings.append(str(exc))
    try:
        cal = benjamin_berger_bf(p).fpr50
    except DomainError as exc:
        warnings.append(str(exc))
    return CurveRow(
        sweep_value=value,
        l10_pequals=l10_pe,
        l10_plessthan=l10_pl,
        fpr_pequals=f_pe,
        fpr_plessthan=f_pl,
        calibration_fpr50=cal,
        warnings=tuple(warnings),
    )


def curve(
    design: TestDesign,
    sweep: Sweep,
    grid: Iterable[float],
    *,
    p: float = 0.05,
    prior_h1: float = 0.5,
) -> list[CurveRow]:
    """Evaluate the evidence measures along a grid; order preserved.

    A row whose value is outside its parameter's domain reports the error in
    that row's warnings instead of aborting the sweep.
    """
    sweep = Sweep(sweep)
    rows: list[CurveRow] = []
    for value in grid:
        try:
            if sweep is Sweep.PRIOR:
                pi = _check_prob(value, "prior", open_ends=False)
                rows.append(_curve_row(design, p, pi, float(value)))
            elif sweep is Sweep.P:
                rows.append(_curve_row(design, float(value), prior_h1, float(value)))
            else:
                n = int(value)
                if n != value:
                    raise DomainError(f"n grid values must be integers, got {value!r}")
                rows.append(_curve_row(replace(design, n_per_group=n), p, prior_h1, float(value)))
        except DomainError as exc:
            rows.append(CurveRow(sweep_value=float(value), warnings=(str(exc),)))
    return rows
