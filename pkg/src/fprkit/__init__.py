"""fprkit: turn an observed t-test p-value into false-positive-risk evidence."""

__version__ = "0.1.0"

from .errors import DomainError, FprkitError, InfeasibleError
from .fprcore import (
    DEFAULT_DESIGN,
    Alternative,
    Approach,
    Calibration,
    Evidence,
    FprResult,
    LikelihoodRatio,
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
from .simlab import SimConfig, SimOutcome, simulate, simulate_sharded
from .tdist import CentralT, NoncentralT, cdf, pdf, quantile

__all__ = [
    "__version__",
    "FprkitError",
    "DomainError",
    "InfeasibleError",
    "CentralT",
    "NoncentralT",
    "pdf",
    "cdf",
    "quantile",
    "Approach",
    "Alternative",
    "TestDesign",
    "DEFAULT_DESIGN",
    "Evidence",
    "LikelihoodRatio",
    "FprResult",
    "Calibration",
    "evidence_from_p",
    "power",
    "lr_p_equals",
    "lr_p_less_than",
    "fpr",
    "fpr50",
    "prior_for_fpr",
    "benjamin_berger_bf",
    "curve",
    "SimConfig",
    "SimOutcome",
    "simulate",
    "simulate_sharded",
]
