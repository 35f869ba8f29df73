"""Seeded Monte-Carlo replication of two-sample t-tests.

Each experiment draws two groups of unit-variance normals (the first
shifted by the design's effect size when the alternative is true, which
happens with probability prior_h1), computes the pooled-variance t and
its two-sided p, and is tallied against the significance threshold and a
p-value window.

Determinism contract: experiments are partitioned into fixed blocks of
BLOCK_SIZE; block j uses the counter-based Philox generator keyed by
(seed, j).  Totals are therefore identical for any shard count, and a
run is fully reproducible from (seed, config) alone.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DomainError
from .fprcore import TestDesign
from .tdist import two_sided_p

__all__ = ["BLOCK_SIZE", "RNG_NAME", "SimConfig", "SimOutcome", "simulate", "simulate_sharded"]

BLOCK_SIZE = 16384
RNG_NAME = "philox4x64"  # pinned so outputs identify the generator

_COUNT_FIELDS = ("n_h0", "n_h1", "n_sig_h0", "n_sig_h1", "n_window_h0", "n_window_h1")


@dataclass(frozen=True)
class SimConfig:
    design: TestDesign
    prior_h1: float
    n_experiments: int
    p_window: tuple[float, float]
    seed: int

    def __post_init__(self):
        pi = float(self.prior_h1)
        if not math.isfinite(pi) or not 0.0 <= pi <= 1.0:
            raise DomainError(f"prior_h1 must lie in [0, 1], got {self.prior_h1!r}")
        object.__setattr__(self, "prior_h1", pi)
        if not isinstance(self.n_experiments, int) or self.n_experiments < 1:
            raise DomainError(f"n_experiments must be a positive integer, got {self.n_experiments!r}")
        lo, hi = (float(x) for x in self.p_window)
        if not (0.0 < lo < hi < 1.0):
            raise DomainError(f"p_window must satisfy 0 < lo < hi < 1, got {self.p_window!r}")
        object.__setattr__(self, "p_window", (lo, hi))
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2**64:
            raise DomainError(f"seed must be a 64-bit unsigned integer, got {self.seed!r}")


@dataclass(frozen=True)
class SimOutcome:
    """Counts and ratios from one simulation run.

    Ratios with a zero denominator are None (undefined), never silently 0.
    """

    n_h0: int
    n_h1: int
    n_sig_h0: int
    n_sig_h1: int
    n_window_h0: int
    n_window_h1: int
    empirical_fpr_window: Optional[float]
    empirical_fpr_threshold: Optional[float]
    empirical_power: Optional[float]
    empirical_alpha: Optional[float]

    def as_dict(self) -> dict:
        return {
            "n_h0": self.n_h0,
            "n_h1": self.n_h1,
            "n_sig_h0": self.n_sig_h0,
            "n_sig_h1": self.n_sig_h1,
            "n_window_h0": self.n_window_h0,
            "n_window_h1": self.n_window_h1,
            "empirical_fpr_window": self.empirical_fpr_window,
            "empirical_fpr_threshold": self.empirical_fpr_threshold,
            "empirical_power": self.empirical_power,
            "empirical_alpha": self.empirical_alpha,
        }


def _ratio(num: int, den: int) -> Optional[float]:
    return num / den if den > 0 else None


def _run_block(cfg: SimConfig, block: int) -> np.ndarray:
    start = block * BLOCK_SIZE
    m = min(BLOCK_SIZE, cfg.n_experiments - start)
    rng = np.random.Generator(
        np.random.Philox(key=np.array([cfg.seed, block], dtype=np.uint64))
    )
    n = cfg.design.n_per_group
    h1 = rng.random(m) < cfg.prior_h1
    x = rng.standard_normal((m, n))
    x += np.where(h1, cfg.design.effect_size_sd, 0.0)[:, None]
    y = rng.standard_normal((m, n))

    sp2 = 0.5 * (x.var(axis=1, ddof=1) + y.var(axis=1, ddof=1))
    t = (x.mean(axis=1) - y.mean(axis=1)) / np.sqrt(sp2 * 2.0 / n)
    p = two_sided_p(cfg.design.df(), t)

    sig = p < cfg.design.alpha
    lo, hi = cfg.p_window
    in_window = (p >= lo) & (p <= hi)
    h0 = ~h1
    return np.array(
        [
            int(h0.sum()),
            int(h1.sum()),
            int((sig & h0).sum()),
            int((sig & h1).sum()),
            int((in_window & h0).sum()),
            int((in_window & h1).sum()),
        ],
        dtype=np.int64,
    )


def _outcome(counts: np.ndarray) -> SimOutcome:
    n_h0, n_h1, n_sig_h0, n_sig_h1, n_window_h0, n_window_h1 = (int(c) for c in counts)
    return SimOutcome(
        n_h0=n_h0,
        n_h1=n_h1,
        n_sig_h0=n_sig_h0,
        n_sig_h1=n_sig_h1,
        n_window_h0=n_window_h0,
        n_window_h1=n_window_h1,
        empirical_fpr_window=_ratio(n_window_h0, n_window_h0 + n_window_h1),
        empirical_fpr_threshold=_ratio(n_sig_h0, n_sig_h0 + n_sig_h1),
        empirical_power=_ratio(n_sig_h1, n_h1),
        empirical_alpha=_ratio(n_sig_h0, n_h0),
    )


def _n_blocks(cfg: SimConfig) -> int:
    return (cfg.n_experiments + BLOCK_SIZE - 1) // BLOCK_SIZE


def simulate(cfg: SimConfig) -> SimOutcome:
    """Run every block sequentially; deterministic given cfg.seed."""
    counts = np.zeros(6, dtype=np.int64)
    for block in range(_n_blocks(cfg)):
        counts += _run_block(cfg, block)
    return _outcome(counts)


def max_workers_from_env(requested: int) -> int:
    cap = os.environ.get("FPRKIT_THREADS")
    if cap:
        try:
            requested = min(requested, max(1, int(cap)))
        except ValueError:
            pass
    return max(1, requested)


def simulate_sharded(cfg: SimConfig, n_shards: int) -> SimOutcome:
    """Same totals as simulate() for any n_shards; blocks fan out to threads."""
    if not isinstance(n_shards, int) or n_shards < 1:
        raise DomainError(f"n_shards must be a positive integer, got {n_shards!r}")
    n_blocks = _n_blocks(cfg)
    workers = max_workers_from_env(min(n_shards, n_blocks))
    if workers == 1:
        return simulate(cfg)
    counts = np.zeros(6, dtype=np.int64)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        for block_counts in pool.map(lambda b: _run_block(cfg, b), range(n_blocks)):
            counts += block_counts
    return _outcome(counts)
