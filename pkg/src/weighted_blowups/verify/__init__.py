from .coherence import coherence
from .nests import NestAgreement, compare_nests, nest_oracle
from .reports import (
    CheckResult,
    CoherenceReport,
    ConjectureReport,
    SmoothnessReport,
    StratumReport,
    VerificationReport,
)
from .smoothness import fd_smoothness, forced_component_check, forced_component_map, sample_transition_checks
from .strata import control_set_search, curve_control_set, sample_sequences, stratum_closure
from .suite import run_suite

__all__ = [
    "CheckResult",
    "CoherenceReport",
    "ConjectureReport",
    "NestAgreement",
    "SmoothnessReport",
    "StratumReport",
    "VerificationReport",
    "coherence",
    "compare_nests",
    "control_set_search",
    "curve_control_set",
    "fd_smoothness",
    "forced_component_check",
    "forced_component_map",
    "nest_oracle",
    "run_suite",
    "sample_sequences",
    "sample_transition_checks",
    "stratum_closure",
]
