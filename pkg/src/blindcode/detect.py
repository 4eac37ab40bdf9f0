"""Code detectors over a candidate set of same-size linear codes.

Three detectors are provided:

* minimum-distance detection: pick the candidate minimizing the summed
  distance between each observed word and the code (integer scores);
* exact maximum-likelihood detection under a binary symmetric channel,
  scored in the log domain for numerical stability;
* the max-log approximation of the likelihood detector, which keeps only
  the dominant likelihood term per observation and therefore reduces to
  the minimum-distance objective exactly.

Ties are broken deterministically by lowest candidate index and surfaced
through the ``tie`` flag on the result.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import gf2
from .errors import (
    CrossoverRangeError,
    DimensionMismatchError,
    DuplicateCandidateError,
)
from .gf2 import BitMatrix, BitVector
from .linear_code import (
    DEFAULT_ENUMERATION_CAP,
    LinearCode,
    distance_to_code,
    enumerate_span_ints,
)

#: Relative tolerance under which two log-likelihood scores count as tied.
MLCD_TIE_RTOL = 1e-12


class DetectionMethod(str, Enum):
    MDCD = "mdcd"
    MLCD = "mlcd"
    MAXLOG = "maxlog"


@dataclass(frozen=True)
class ChannelParam:
    """Binary symmetric channel crossover probability, 0 < p < 1/2."""

    p: float

    def __post_init__(self) -> None:
        if not 0.0 < self.p < 0.5:
            raise CrossoverRangeError(
                f"crossover probability must lie in (0, 0.5), got {self.p}"
            )

    @property
    def alpha(self) -> float:
        """Likelihood ratio p/(1-p), strictly inside (0, 1)."""
        return self.p / (1.0 - self.p)


@dataclass(frozen=True)
class CandidateSet:
    """An ordered set of same-length, same-dimension candidate codes."""

    codes: tuple[LinearCode, ...]

    def __post_init__(self) -> None:
        if not self.codes:
            raise ValueError("candidate set must contain at least one code")
        first = self.codes[0]
        for c in self.codes[1:]:
            if c.n != first.n or c.k != first.k:
                raise DimensionMismatchError(
                    "all candidates must share the same length and dimension"
                )
        seen: dict[tuple[int, ...], int] = {}
        for i, c in enumerate(self.codes):
            key = gf2.rref(c.generator)
            if key in seen:
                raise DuplicateCandidateError(
                    f"candidates {seen[key]} and {i} span the same code"
                )
            seen[key] = i

    @property
    def ell(self) -> int:
        return len(self.codes)

    @property
    def n(self) -> int:
        return self.codes[0].n

    @property
    def k(self) -> int:
        return self.codes[0].k


@dataclass(frozen=True)
class DetectionResult:
    chosen_index: int
    scores: tuple[float, ...]
    tie: bool
    method: DetectionMethod


def _check_observations(observations: BitMatrix, candidates: CandidateSet) -> None:
    if observations.num_cols != candidates.n:
        raise DimensionMismatchError(
            f"observation length {observations.num_cols} != "
            f"code length {candidates.n}"
        )


def detect_mdcd(
    observations: BitMatrix,
    candidates: CandidateSet,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> DetectionResult:
    """Minimum-distance detection: argmin of summed distances to each code."""
    _check_observations(observations, candidates)
    scores = tuple(
        sum(distance_to_code(y, code, cap=cap) for y in observations.rows)
        for code in candidates.codes
    )
    best = min(scores)
    return DetectionResult(
        chosen_index=scores.index(best),
        scores=scores,
        tie=scores.count(best) > 1,
        method=DetectionMethod.MDCD,
    )


def _distance_histogram(
    y: BitVector, code: LinearCode, cap: int
) -> list[int]:
    """Count codewords at each Hamming distance from y (length n+1)."""
    hist = [0] * (code.n + 1)
    target = y.value
    for v in enumerate_span_ints(code, cap=cap):
        hist[(target ^ v).bit_count()] += 1
    return hist


def log_likelihood_score(
    y: BitVector,
    code: LinearCode,
    channel: ChannelParam,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> float:
    """Log of the per-word likelihood sum over all codewords.

    Codewords are grouped by distance d, so the sum collapses to at most
    n+1 terms log(count) + d*log(alpha), combined with log-sum-exp.
    """
    if y.length != code.n:
        raise DimensionMismatchError(
            f"word length {y.length} != block length {code.n}"
        )
    ln_alpha = math.log(channel.alpha)
    terms = [
        math.log(count) + d * ln_alpha
        for d, count in enumerate(_distance_histogram(y, code, cap))
        if count
    ]
    top = max(terms)
    return top + math.log(math.fsum(math.exp(t - top) for t in terms))


def likelihood_score(
    y: BitVector,
    code: LinearCode,
    channel: ChannelParam,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> float:
    """Sum over all codewords c of alpha^distance(y, c); strictly positive."""
    return math.exp(log_likelihood_score(y, code, channel, cap=cap))


def detect_mlcd(
    observations: BitMatrix,
    candidates: CandidateSet,
    channel: ChannelParam,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> DetectionResult:
    """Exact maximum-likelihood detection; scores are log-likelihoods.

    The per-candidate score is the sum over observation rows of the
    log-likelihood sum, accumulated in row order so results are bitwise
    reproducible.  Candidates within ``MLCD_TIE_RTOL`` relative tolerance
    of the maximum count as tied; the lowest index wins.
    """
    _check_observations(observations, candidates)
    scores = tuple(
        math.fsum(
            log_likelihood_score(y, code, channel, cap=cap)
            for y in observations.rows
        )
        for code in candidates.codes
    )
    best = max(scores)
    near = [
        i
        for i, s in enumerate(scores)
        if s == best or math.isclose(s, best, rel_tol=MLCD_TIE_RTOL, abs_tol=0.0)
    ]
    return DetectionResult(
        chosen_index=near[0],
        scores=scores,
        tie=len(near) > 1,
        method=DetectionMethod.MLCD,
    )


def detect_maxlog(
    observations: BitMatrix,
    candidates: CandidateSet,
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> DetectionResult:
    """Max-log approximation of likelihood detection.

    Keeping only the dominant likelihood term per observation leaves the
    summed minimum distance as the surrogate objective, so the chosen
    index always equals minimum-distance detection under the same
    tie-break policy.  Scores are exact integers.
    """
    _check_observations(observations, candidates)
    scores = []
    for code in candidates.codes:
        span = enumerate_span_ints(code, cap=cap)
        total = 0
        for y in observations.rows:
            target = y.value
            total += min((target ^ v).bit_count() for v in span)
        scores.append(total)
    scores = tuple(scores)
    best = min(scores)
    return DetectionResult(
        chosen_index=scores.index(best),
        scores=scores,
        tie=scores.count(best) > 1,
        method=DetectionMethod.MAXLOG,
    )
