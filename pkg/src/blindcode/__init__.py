"""Blind detection of binary linear codes from noisy observations.

The toolkit provides dense GF(2) linear algebra on int bitsets, linear
codes with exhaustive span semantics, exact minimum-distance and
maximum-likelihood code detectors, a split-and-conquer reduction that
decodes through any detection oracle, a zero-distance rank-augmentation
construction for low-rank observations, and a seeded binary symmetric
channel Monte Carlo harness.
"""

from .channel import (
    BscConfig,
    MethodOutcome,
    ObservationBatch,
    TrialBatch,
    generate_observations,
    run_error_rate_experiment,
)
from .detect import (
    CandidateSet,
    ChannelParam,
    DetectionMethod,
    DetectionResult,
    detect_maxlog,
    detect_mdcd,
    detect_mlcd,
    likelihood_score,
    log_likelihood_score,
)
from .errors import (
    BlindCodeError,
    CrossoverRangeError,
    DimensionMismatchError,
    DuplicateCandidateError,
    EnumerationCapError,
    FormatError,
    InfeasibleRankError,
    OracleContractError,
    RankDeficientError,
    SplitUnderflowError,
)
from .gf2 import (
    BitMatrix,
    BitVector,
    hamming_distance,
    rank,
    select_independent_rows,
    standard_basis,
    vec_mat_mul,
    xor_add,
)
from .linear_code import (
    DEFAULT_ENUMERATION_CAP,
    Codeword,
    LinearCode,
    contains,
    distance_to_code,
    enumerate_codewords,
    enumerate_span_ints,
    mdd_decode,
    span_equals,
)
from .rankaug import AugmentedCode, build_zero_distance_code
from .reduction import (
    MdcdOracle,
    SplitTriple,
    exhaustive_mdcd_oracle,
    mdcd3_via_pairs,
    mdd_via_oracle,
    split_cover,
)

__all__ = [
    "AugmentedCode",
    "BitMatrix",
    "BitVector",
    "BlindCodeError",
    "BscConfig",
    "CandidateSet",
    "ChannelParam",
    "Codeword",
    "CrossoverRangeError",
    "DEFAULT_ENUMERATION_CAP",
    "DetectionMethod",
    "DetectionResult",
    "DimensionMismatchError",
    "DuplicateCandidateError",
    "EnumerationCapError",
    "FormatError",
    "InfeasibleRankError",
    "LinearCode",
    "MdcdOracle",
    "MethodOutcome",
    "ObservationBatch",
    "OracleContractError",
    "RankDeficientError",
    "SplitTriple",
    "SplitUnderflowError",
    "TrialBatch",
    "build_zero_distance_code",
    "contains",
    "detect_maxlog",
    "detect_mdcd",
    "detect_mlcd",
    "distance_to_code",
    "enumerate_codewords",
    "enumerate_span_ints",
    "exhaustive_mdcd_oracle",
    "generate_observations",
    "hamming_distance",
    "likelihood_score",
    "log_likelihood_score",
    "mdcd3_via_pairs",
    "mdd_decode",
    "mdd_via_oracle",
    "rank",
    "run_error_rate_experiment",
    "select_independent_rows",
    "span_equals",
    "split_cover",
    "standard_basis",
    "vec_mat_mul",
    "xor_add",
]
