"""Shared test utilities: naive oracles and seeded instance generators.

The naive_* functions are deliberately independent of the package's
enumeration code: they work on plain bit tuples with itertools, so they
can serve as brute-force oracles for the fast paths.
"""

from __future__ import annotations

import random
from itertools import product

from blindcode import BitMatrix, BitVector, CandidateSet, LinearCode
from blindcode import gf2


def bits_of(vec: BitVector) -> tuple[int, ...]:
    return tuple(vec)


def naive_span(rows: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All codewords of the row span, via explicit message products."""
    n = len(rows[0])
    out = set()
    for coeffs in product((0, 1), repeat=len(rows)):
        word = [0] * n
        for c, row in zip(coeffs, rows):
            if c:
                word = [w ^ r for w, r in zip(word, row)]
        out.add(tuple(word))
    return out


def naive_distance(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    return sum(x != y for x, y in zip(a, b))


def naive_min_distance(y: tuple[int, ...], rows: list[tuple[int, ...]]) -> int:
    return min(naive_distance(y, c) for c in naive_span(rows))


def naive_code_span(code: LinearCode) -> set[tuple[int, ...]]:
    return naive_span([bits_of(r) for r in code.generator.rows])


def random_vector(rng: random.Random, n: int) -> BitVector:
    return BitVector.from_bits(rng.randrange(2) for _ in range(n))


def random_full_rank_matrix(rng: random.Random, k: int, n: int) -> BitMatrix:
    """Rejection-sample a full-rank k x n binary matrix."""
    assert k <= n
    while True:
        m = BitMatrix(tuple(random_vector(rng, n) for _ in range(k)))
        if gf2.rank(m) == k:
            return m


def random_code(rng: random.Random, k: int, n: int) -> LinearCode:
    return LinearCode(random_full_rank_matrix(rng, k, n))


def random_candidate_set(
    rng: random.Random, ell: int, k: int, n: int
) -> CandidateSet:
    """Draw ell span-distinct codes of the same size."""
    codes: list[LinearCode] = []
    seen = set()
    for _ in range(10_000):
        if len(codes) == ell:
            break
        code = random_code(rng, k, n)
        key = gf2.rref(code.generator)
        if key in seen:
            continue
        seen.add(key)
        codes.append(code)
    else:
        raise AssertionError(f"could not draw {ell} distinct ({k},{n}) codes")
    return CandidateSet(tuple(codes))


def random_matrix(rng: random.Random, rows: int, n: int) -> BitMatrix:
    return BitMatrix(tuple(random_vector(rng, n) for _ in range(rows)))
