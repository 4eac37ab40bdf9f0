"""Decoding through a detection oracle.

``split_cover`` breaks a rank-l code into three rank-(l-1) codes whose
spans union to the original span.  ``mdd_via_oracle`` exploits that to
solve exact minimum-distance decoding with a chain of calls to *any*
minimum-distance code-detection oracle: each call narrows the span that
still contains a closest codeword, a ternary-search over the codeword
space.  ``mdcd3_via_pairs`` composes a two-candidate oracle into a
three-candidate solver by round-robin over the three pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import gf2
from .detect import CandidateSet, detect_mdcd
from .errors import (
    DimensionMismatchError,
    OracleContractError,
    RankDeficientError,
    SplitUnderflowError,
)
from .gf2 import BitMatrix, BitVector
from .linear_code import LinearCode

#: Any callable that, given observations and candidates, returns the index
#: of a candidate attaining the minimum summed distance.  Tie-break is the
#: oracle's own business.
MdcdOracle = Callable[[BitMatrix, CandidateSet], int]


@dataclass(frozen=True)
class SplitTriple:
    """Three rank-(l-1) generators covering a rank-l code's span."""

    g1: BitMatrix
    g2: BitMatrix
    g3: BitMatrix

    def as_tuple(self) -> tuple[BitMatrix, BitMatrix, BitMatrix]:
        return (self.g1, self.g2, self.g3)


def split_cover(generator: BitMatrix) -> SplitTriple:
    """Split a full-rank l x n generator (l >= 2) into a covering triple.

    The triple keeps rows 3..l and varies the head: row 1 alone, row 2
    alone, and their sum.  Fixing the head's coefficient pattern to
    "second off", "first off", "first equals second" covers every message,
    so the three spans union to the parent span and each has rank l-1.
    """
    l = generator.num_rows
    if l < 2:
        raise SplitUnderflowError(f"cannot split a rank-{l} code; need rank >= 2")
    if gf2.rank(generator) != l:
        raise RankDeficientError(
            f"generator has rank {gf2.rank(generator)}, expected {l}"
        )
    rows = generator.rows
    tail = rows[2:]
    return SplitTriple(
        g1=BitMatrix((rows[0],) + tail),
        g2=BitMatrix((rows[1],) + tail),
        g3=BitMatrix((rows[0] ^ rows[1],) + tail),
    )


def exhaustive_mdcd_oracle(observations: BitMatrix, candidates: CandidateSet) -> int:
    """Honest brute-force detection oracle (lowest index on ties)."""
    return detect_mdcd(observations, candidates).chosen_index


def mdd_via_oracle(
    generator: BitMatrix,
    y: BitVector,
    oracle: MdcdOracle,
) -> tuple[BitVector, tuple[BitMatrix, ...]]:
    """Minimum-distance decode y against span(generator) via an oracle.

    Starting from the rank-k input, each round splits the current code
    and asks the oracle which of the three rank-(l-1) halves is closest
    to y; that half still contains a globally closest codeword, so after
    k-1 rounds a rank-1 code remains and the answer is whichever of its
    two codewords (zero or the single row) is closer, taking zero on a
    tie.  Exactly k-1 oracle calls are made; splitting stops at rank 1
    because a rank-1 code cannot be split further.

    Returns the decoded codeword and the trace of k chosen generators,
    ending with the 1 x n matrix holding the decoded word itself.
    """
    k = generator.num_rows
    if gf2.rank(generator) != k:
        raise RankDeficientError(
            f"generator has rank {gf2.rank(generator)}, expected {k}"
        )
    if y.length != generator.num_cols:
        raise DimensionMismatchError(
            f"word length {y.length} != block length {generator.num_cols}"
        )

    observations = BitMatrix((y,))
    trace: list[BitMatrix] = []
    current = generator
    while current.num_rows > 1:
        triple = split_cover(current)
        candidates = CandidateSet(tuple(LinearCode(g) for g in triple.as_tuple()))
        index = oracle(observations, candidates)
        if not isinstance(index, int) or not 0 <= index < 3:
            raise OracleContractError(
                f"oracle returned {index!r}, expected an index in 0..2"
            )
        current = triple.as_tuple()[index]
        trace.append(current)

    row = current.rows[0]
    zero = BitVector.zeros(row.length)
    if y.weight() <= gf2.hamming_distance(y, row):
        chosen = zero
    else:
        chosen = row
    trace.append(BitMatrix((chosen,)))
    return chosen, tuple(trace)


def mdcd3_via_pairs(
    observations: BitMatrix,
    candidates: CandidateSet,
    pair_oracle: MdcdOracle,
) -> int:
    """Solve three-candidate detection with a two-candidate oracle.

    The pair oracle is consulted on each of the three candidate pairs and
    the candidate that wins every pair it appears in is returned.  Since
    summed distances are totally ordered integers such a round-robin
    winner exists whenever the oracle's tie-breaks are consistent; if its
    arbitrary tie-breaking produces a cycle (possible only when all three
    scores are equal) the lowest index wins.
    """
    if candidates.ell != 3:
        raise ValueError(f"expected exactly 3 candidates, got {candidates.ell}")
    wins = [0, 0, 0]
    for i, j in ((0, 1), (0, 2), (1, 2)):
        pair = CandidateSet((candidates.codes[i], candidates.codes[j]))
        local = pair_oracle(observations, pair)
        if not isinstance(local, int) or local not in (0, 1):
            raise OracleContractError(
                f"pair oracle returned {local!r}, expected 0 or 1"
            )
        wins[(i, j)[local]] += 1
    for index, count in enumerate(wins):
        if count == 2:
            return index
    # A cycle: every candidate won exactly once, so all scores are tied.
    return 0
