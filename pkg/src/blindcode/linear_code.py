"""Binary linear codes with full span semantics.

A code is held as a full-rank generator matrix; its 2^k codewords are
the row span.  Enumeration-based operations (decoding, distance) are
honest brute force and guarded by an explicit dimension cap; membership
and span equality use Gaussian elimination and work for any dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import gf2
from .errors import DimensionMismatchError, EnumerationCapError, RankDeficientError
from .gf2 import BitMatrix, BitVector

#: Largest code dimension the enumeration paths accept (2^20 codewords).
DEFAULT_ENUMERATION_CAP = 20


@dataclass(frozen=True)
class LinearCode:
    """A binary linear code given by a full-rank k x n generator matrix."""

    generator: BitMatrix

    def __post_init__(self) -> None:
        k, n = self.generator.num_rows, self.generator.num_cols
        if k > n:
            raise DimensionMismatchError(f"dimension {k} exceeds block length {n}")
        if gf2.rank(self.generator) != k:
            raise RankDeficientError(
                f"generator has rank {gf2.rank(self.generator)}, expected {k}"
            )

    @classmethod
    def from_strings(cls, lines) -> "LinearCode":
        return cls(BitMatrix.from_strings(lines))

    @property
    def k(self) -> int:
        return self.generator.num_rows

    @property
    def n(self) -> int:
        return self.generator.num_cols

    def encode(self, message: BitVector) -> BitVector:
        return gf2.vec_mat_mul(message, self.generator)


@dataclass(frozen=True)
class Codeword:
    """A codeword together with the message that generated it."""

    value: BitVector
    message: BitVector


def _check_cap(code: LinearCode, cap: int) -> None:
    if code.k > cap:
        raise EnumerationCapError(
            f"dimension {code.k} exceeds enumeration cap {cap}"
        )


@lru_cache(maxsize=64)
def _span_ints(row_ints: tuple[int, ...]) -> tuple[int, ...]:
    # Codeword for counter m reuses the one for m with its lowest set bit
    # cleared, so the whole span costs one xor per codeword.  Counter m is
    # read MSB-first as the message tuple, giving lexicographic order.
    k = len(row_ints)
    out = [0] * (1 << k)
    for m in range(1, 1 << k):
        low = (m & -m).bit_length() - 1
        out[m] = out[m & (m - 1)] ^ row_ints[k - 1 - low]
    return tuple(out)


def enumerate_span_ints(
    code: LinearCode, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[int, ...]:
    """All 2^k codewords as packed ints, in lexicographic message order."""
    _check_cap(code, cap)
    return _span_ints(code.generator.row_ints())


def _message_vector(m: int, k: int) -> BitVector:
    # Counter bit (k-1-j) is message coordinate j.
    value = 0
    for j in range(k):
        value |= ((m >> (k - 1 - j)) & 1) << j
    return BitVector(k, value)


def enumerate_codewords(
    code: LinearCode, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> list[Codeword]:
    """All 2^k codewords, in lexicographic order of their messages."""
    values = enumerate_span_ints(code, cap=cap)
    n, k = code.n, code.k
    return [
        Codeword(BitVector(n, v), _message_vector(m, k))
        for m, v in enumerate(values)
    ]


@lru_cache(maxsize=256)
def _pivot_basis(row_ints: tuple[int, ...]) -> dict[int, int]:
    return gf2.row_basis(row_ints)


def contains(code: LinearCode, y: BitVector) -> bool:
    """Span membership by elimination; valid for any dimension."""
    if y.length != code.n:
        raise DimensionMismatchError(
            f"word length {y.length} != block length {code.n}"
        )
    return gf2.in_span(y.value, _pivot_basis(code.generator.row_ints()))


def mdd_decode(
    code: LinearCode, y: BitVector, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> tuple[Codeword, int]:
    """Exact minimum-distance decoding by exhaustive enumeration.

    Returns the closest codeword and its distance.  Among equally close
    codewords the one with the lexicographically smallest message wins,
    so the result is deterministic.
    """
    if y.length != code.n:
        raise DimensionMismatchError(
            f"word length {y.length} != block length {code.n}"
        )
    values = enumerate_span_ints(code, cap=cap)
    target = y.value
    best_m = 0
    best_d = (target ^ values[0]).bit_count()
    for m, v in enumerate(values):
        d = (target ^ v).bit_count()
        if d < best_d:
            best_d = d
            best_m = m
    return (
        Codeword(BitVector(code.n, values[best_m]), _message_vector(best_m, code.k)),
        best_d,
    )


def distance_to_code(
    y: BitVector, code: LinearCode, *, cap: int = DEFAULT_ENUMERATION_CAP
) -> int:
    """Minimum Hamming distance from y to any codeword."""
    if y.length != code.n:
        raise DimensionMismatchError(
            f"word length {y.length} != block length {code.n}"
        )
    target = y.value
    return min((target ^ v).bit_count() for v in enumerate_span_ints(code, cap=cap))


def span_equals(a: LinearCode, b: LinearCode) -> bool:
    """True iff the two generators span the same codeword set."""
    if a.n != b.n:
        raise DimensionMismatchError(
            f"block length mismatch: {a.n} vs {b.n}"
        )
    return gf2.rref(a.generator) == gf2.rref(b.generator)
