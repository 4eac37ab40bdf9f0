"""Binary symmetric channel simulation and detection-error experiments.

Randomness is drawn from numpy's Philox counter-based generator, keyed
per trial through ``SeedSequence(master_seed, spawn_key=...)``: the code
choice of trial t uses spawn key (t, 0) and its observation batch uses
(t, 1).  Every stream is a pure function of (master_seed, trial_id), so
trials are reproducible in isolation and independent of scheduling.  The
draw order inside a batch is fixed: all message bits first (N x k), then
all flip decisions (N x n uniforms compared against p).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .detect import (
    CandidateSet,
    ChannelParam,
    DetectionMethod,
    detect_maxlog,
    detect_mdcd,
    detect_mlcd,
)
from .gf2 import BitMatrix, BitVector
from .linear_code import DEFAULT_ENUMERATION_CAP


@dataclass(frozen=True)
class BscConfig:
    """Channel and seeding configuration; p = 0 is allowed for sanity runs."""

    p: float
    master_seed: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.p < 0.5:
            raise ValueError(f"crossover probability must lie in [0, 0.5), got {self.p}")
        if not 0 <= self.master_seed < 2**64:
            raise ValueError("master seed must fit in an unsigned 64-bit integer")


@dataclass(frozen=True)
class ObservationBatch:
    """Noisy codewords plus the ground truth that produced them."""

    observations: BitMatrix
    true_code_index: int
    messages: tuple[BitVector, ...]
    flip_masks: tuple[BitVector, ...]


@dataclass(frozen=True)
class MethodOutcome:
    method: DetectionMethod
    errors: int
    trials: int
    ties: int

    @property
    def error_rate(self) -> float:
        return self.errors / self.trials

    @property
    def ci95_halfwidth(self) -> float:
        """95% binomial confidence half-width around the error rate."""
        rate = self.error_rate
        return 1.96 * math.sqrt(rate * (1.0 - rate) / self.trials)


@dataclass(frozen=True)
class TrialBatch:
    """Aggregated Monte Carlo results for one experiment configuration."""

    p: float
    num_words: int
    trials: int
    master_seed: int
    outcomes: tuple[MethodOutcome, ...]

    def outcome(self, method: DetectionMethod) -> MethodOutcome:
        for o in self.outcomes:
            if o.method is method:
                return o
        raise KeyError(method)


def _trial_rng(master_seed: int, trial_id: int, slot: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(trial_id, slot))
    return np.random.Generator(np.random.Philox(seq))


def generate_observations(
    candidates: CandidateSet,
    true_index: int,
    num_words: int,
    config: BscConfig,
    trial_id: int,
) -> ObservationBatch:
    """Encode uniform messages with the chosen code and add BSC noise.

    The random stream depends only on (master_seed, trial_id), so a fixed
    configuration reproduces the batch bit for bit.
    """
    if not 0 <= true_index < candidates.ell:
        raise IndexError(
            f"true code index {true_index} out of range for {candidates.ell} candidates"
        )
    if num_words < 1:
        raise ValueError(f"need at least one observation, got {num_words}")
    code = candidates.codes[true_index]
    k, n = candidates.k, candidates.n

    rng = _trial_rng(config.master_seed, trial_id, slot=1)
    message_bits = rng.integers(0, 2, size=(num_words, k), dtype=np.uint8)
    flip_bits = rng.random(size=(num_words, n)) < config.p

    messages = []
    masks = []
    rows = []
    for i in range(num_words):
        message = BitVector.from_bits(int(b) for b in message_bits[i])
        mask = BitVector.from_bits(int(b) for b in flip_bits[i])
        messages.append(message)
        masks.append(mask)
        rows.append(code.encode(message) ^ mask)
    return ObservationBatch(
        observations=BitMatrix(tuple(rows)),
        true_code_index=true_index,
        messages=tuple(messages),
        flip_masks=tuple(masks),
    )


def _canonical_methods(methods: Iterable[DetectionMethod]) -> tuple[DetectionMethod, ...]:
    requested = set(methods)
    if not requested:
        raise ValueError("at least one detection method is required")
    return tuple(m for m in DetectionMethod if m in requested)


def run_error_rate_experiment(
    candidates: CandidateSet,
    config: BscConfig,
    num_words: int,
    trials: int,
    methods: Iterable[DetectionMethod],
    *,
    cap: int = DEFAULT_ENUMERATION_CAP,
) -> TrialBatch:
    """Estimate detection error rates over seeded independent trials.

    Each trial samples the true code uniformly, generates a noisy batch,
    and scores every requested detector; an error is any trial whose
    chosen index differs from the truth.  Aggregation uses plain integer
    counters, so the result is deterministic for a fixed seed.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    wanted = _canonical_methods(methods)
    channel = (
        ChannelParam(config.p) if DetectionMethod.MLCD in wanted else None
    )

    errors = {m: 0 for m in wanted}
    ties = {m: 0 for m in wanted}
    for trial_id in range(trials):
        choice_rng = _trial_rng(config.master_seed, trial_id, slot=0)
        true_index = int(choice_rng.integers(0, candidates.ell))
        batch = generate_observations(
            candidates, true_index, num_words, config, trial_id
        )
        for method in wanted:
            if method is DetectionMethod.MDCD:
                result = detect_mdcd(batch.observations, candidates, cap=cap)
            elif method is DetectionMethod.MAXLOG:
                result = detect_maxlog(batch.observations, candidates, cap=cap)
            else:
                assert channel is not None
                result = detect_mlcd(batch.observations, candidates, channel, cap=cap)
            if result.chosen_index != true_index:
                errors[method] += 1
            if result.tie:
                ties[method] += 1

    outcomes = tuple(
        MethodOutcome(method=m, errors=errors[m], trials=trials, ties=ties[m])
        for m in wanted
    )
    return TrialBatch(
        p=config.p,
        num_words=num_words,
        trials=trials,
        master_seed=config.master_seed,
        outcomes=outcomes,
    )
