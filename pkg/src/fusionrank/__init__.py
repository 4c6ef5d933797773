"""Exact conformal-blocks rank computations for finite fusion rings.

The builtin two-label ring reproduces the golden-ratio closed forms and
their Fibonacci summation identities; arbitrary rings plug into the same
genus-0 recursion, smooth-curve reduction and dual-graph factorization,
with an independent brute-force oracle for cross-checking.
"""

from .closed_form import (
    CSV_HEADER,
    RankReport,
    closed_rank,
    closed_rank_n0,
    closed_value,
    sum_clutch,
    sum_tails,
    verify_identity,
)
from .errors import (
    EnumerationLimitError,
    FormatError,
    FusionRankError,
    PreconditionError,
    StabilityError,
    UnknownLabelError,
)
from .fusion import (
    FusionData,
    FusionValidationError,
    ValidationReport,
    Violation,
    builtin_g2_level1,
    load_fusion,
    serialize_fusion,
    validate,
)
from .noleaf import (
    SimpleGraph,
    count_noleaf_subgraphs,
    load_simple_graph,
    moebius_ladder,
)
from .qfield import (
    ONE,
    PHI,
    PHIBAR,
    SQRT5,
    ZERO,
    NonIntegralError,
    Q5,
    binom,
    fib,
)
from .ranks import (
    DualGraph,
    GraphVertex,
    clutch_graph,
    drop_vacua,
    load_dual_graph,
    rank_bruteforce,
    rank_genus0,
    rank_graph,
    rank_smooth,
    tails_graph,
)
from .verlinde import (
    CalibrationError,
    G2RootData,
    LevelWeight,
    VerlindeEvaluation,
    calibrate_exponent,
    g2_root_data,
    g2_weights_at_level,
    verlinde_trig_rank,
)

__all__ = [
    "CSV_HEADER",
    "CalibrationError",
    "DualGraph",
    "EnumerationLimitError",
    "FormatError",
    "FusionData",
    "FusionRankError",
    "FusionValidationError",
    "G2RootData",
    "GraphVertex",
    "LevelWeight",
    "NonIntegralError",
    "ONE",
    "PHI",
    "PHIBAR",
    "PreconditionError",
    "Q5",
    "RankReport",
    "SQRT5",
    "SimpleGraph",
    "StabilityError",
    "UnknownLabelError",
    "ValidationReport",
    "VerlindeEvaluation",
    "Violation",
    "ZERO",
    "binom",
    "builtin_g2_level1",
    "calibrate_exponent",
    "closed_rank",
    "closed_rank_n0",
    "closed_value",
    "clutch_graph",
    "count_noleaf_subgraphs",
    "drop_vacua",
    "fib",
    "g2_root_data",
    "g2_weights_at_level",
    "load_dual_graph",
    "load_fusion",
    "load_simple_graph",
    "moebius_ladder",
    "rank_bruteforce",
    "rank_genus0",
    "rank_graph",
    "rank_smooth",
    "serialize_fusion",
    "sum_clutch",
    "sum_tails",
    "tails_graph",
    "validate",
    "verify_identity",
    "verlinde_trig_rank",
]

__version__ = "0.1.0"
