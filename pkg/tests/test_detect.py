import math
import random

import pytest

from blindcode import (
    BitMatrix,
    BitVector,
    CandidateSet,
    ChannelParam,
    CrossoverRangeError,
    DetectionMethod,
    DimensionMismatchError,
    DuplicateCandidateError,
    LinearCode,
    detect_maxlog,
    detect_mdcd,
    detect_mlcd,
    likelihood_score,
    log_likelihood_score,
)

from helpers import (
    bits_of,
    naive_code_span,
    naive_distance,
    random_candidate_set,
    random_code,
    random_matrix,
    random_vector,
)

# Frozen by independent tuple-based enumeration of both candidate spans.
SCORE_A = 1.448559670781893
SCORE_B = 1.4814814814814814


class TestChannelParam:
    def test_alpha(self):
        assert ChannelParam(0.25).alpha == pytest.approx(1.0 / 3.0)

    @pytest.mark.parametrize("p", [0.0, 0.5, 0.75, -0.1])
    def test_rejects_out_of_range(self, p):
        with pytest.raises(CrossoverRangeError):
            ChannelParam(p)


class TestCandidateSet:
    def test_requires_shared_dimensions(self, code_a):
        other = LinearCode.from_strings(["10000", "01000"])
        with pytest.raises(DimensionMismatchError):
            CandidateSet((code_a, other))

    def test_requires_shared_length(self, code_a):
        other = LinearCode.from_strings(["100", "010", "001"])
        with pytest.raises(DimensionMismatchError):
            CandidateSet((code_a, other))

    def test_rejects_duplicate_span(self, code_a):
        permuted = LinearCode(BitMatrix(code_a.generator.rows[::-1]))
        with pytest.raises(DuplicateCandidateError):
            CandidateSet((code_a, permuted))

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            CandidateSet(())

    def test_singleton_ok(self, code_a):
        assert CandidateSet((code_a,)).ell == 1


class TestDetectMdcd:
    def test_fixture_pair(self, pair, word_matrix):
        result = detect_mdcd(word_matrix, pair)
        assert result.chosen_index == 0
        assert result.scores == (0, 1)
        assert not result.tie
        assert result.method is DetectionMethod.MDCD

    def test_single_candidate(self, code_a, word_matrix):
        result = detect_mdcd(word_matrix, CandidateSet((code_a,)))
        assert result.chosen_index == 0

    def test_true_codewords_score_zero(self):
        rng = random.Random(61)
        for _ in range(20):
            k = rng.randint(1, 4)
            n = rng.randint(k + 1, 10)
            candidates = random_candidate_set(rng, 3, k, n)
            j = rng.randrange(3)
            code = candidates.codes[j]
            rows = tuple(
                code.encode(random_vector(rng, k)) for _ in range(rng.randint(1, 4))
            )
            result = detect_mdcd(BitMatrix(rows), candidates)
            assert result.scores[j] == 0
            assert result.scores[result.chosen_index] == 0

    def test_additive_over_rows(self):
        rng = random.Random(67)
        candidates = random_candidate_set(rng, 3, 3, 8)
        rows = tuple(random_vector(rng, 8) for _ in range(5))
        whole = detect_mdcd(BitMatrix(rows), candidates)
        summed = tuple(
            sum(detect_mdcd(BitMatrix((r,)), candidates).scores[i] for r in rows)
            for i in range(3)
        )
        assert whole.scores == summed

    def test_tie_flag_and_lowest_index(self):
        left = LinearCode.from_strings(["10"])
        right = LinearCode.from_strings(["01"])
        y = BitMatrix((BitVector.from_string("11"),))
        result = detect_mdcd(y, CandidateSet((left, right)))
        assert result.scores == (1, 1)
        assert result.tie
        assert result.chosen_index == 0

    def test_dimension_mismatch(self, pair):
        with pytest.raises(DimensionMismatchError):
            detect_mdcd(BitMatrix((BitVector.from_string("111"),)), pair)


class TestLikelihoodScore:
    def test_fixture_values(self, code_a, code_b, word):
        ch = ChannelParam(0.25)
        assert likelihood_score(word, code_a, ch) == pytest.approx(SCORE_A, rel=1e-12)
        assert likelihood_score(word, code_b, ch) == pytest.approx(SCORE_B, rel=1e-12)

    def test_member_gives_at_least_one(self):
        rng = random.Random(71)
        for p in (0.01, 0.25, 0.49):
            ch = ChannelParam(p)
            code = random_code(rng, rng.randint(1, 6), 12)
            member = code.encode(random_vector(rng, code.k))
            assert likelihood_score(member, code, ch) >= 1.0

    def test_log_domain_matches_direct_sum(self):
        rng = random.Random(73)
        for _ in range(30):
            k = rng.randint(1, 10)
            n = rng.randint(k, 14)
            code = random_code(rng, k, n)
            y = random_vector(rng, n)
            ch = ChannelParam(rng.uniform(0.01, 0.49))
            direct = math.fsum(
                ch.alpha ** naive_distance(bits_of(y), c)
                for c in naive_code_span(code)
            )
            stable = likelihood_score(y, code, ch)
            assert abs(stable - direct) <= 1e-9 * direct

    def test_finite_in_deep_log_domain(self):
        # Direct alpha^d products underflow here; the log path must not.
        code = LinearCode.from_strings(["1" * 60])
        y = BitVector.zeros(60)
        log_score = log_likelihood_score(y, code, ChannelParam(1e-9))
        assert math.isfinite(log_score)
        assert log_score == pytest.approx(0.0, abs=1e-12)  # zero codeword dominates


class TestDetectMlcd:
    def test_fixture_pair_prefers_second_code(self, pair, word_matrix):
        result = detect_mlcd(word_matrix, pair, ChannelParam(0.25))
        assert result.chosen_index == 1
        assert result.scores[1] > result.scores[0]
        assert result.scores[0] == pytest.approx(math.log(SCORE_A), rel=1e-12)

    def test_single_candidate(self, code_a, word_matrix):
        result = detect_mlcd(word_matrix, CandidateSet((code_a,)), ChannelParam(0.25))
        assert result.chosen_index == 0

    def test_bitwise_reproducible(self, pair):
        rng = random.Random(79)
        rows = BitMatrix(tuple(random_vector(rng, 5) for _ in range(6)))
        first = detect_mlcd(rows, pair, ChannelParam(0.3))
        second = detect_mlcd(rows, pair, ChannelParam(0.3))
        assert first.scores == second.scores
        assert first.chosen_index == second.chosen_index

    def test_argmax_invariant_under_common_shift(self):
        rng = random.Random(83)
        for _ in range(20):
            candidates = random_candidate_set(rng, 3, 2, 7)
            rows = random_matrix(rng, rng.randint(1, 4), 7)
            result = detect_mlcd(rows, candidates, ChannelParam(0.2))
            shifted = tuple(s + 7.25 for s in result.scores)
            assert shifted.index(max(shifted)) == result.chosen_index


class TestDetectMaxlog:
    def test_fixture_pair_matches_mdcd(self, pair, word_matrix):
        assert (
            detect_maxlog(word_matrix, pair).chosen_index
            == detect_mdcd(word_matrix, pair).chosen_index
            == 0
        )

    def test_single_candidate(self, code_a, word_matrix):
        assert detect_maxlog(word_matrix, CandidateSet((code_a,))).chosen_index == 0

    def test_always_agrees_with_mdcd(self):
        rng = random.Random(89)
        for _ in range(100):
            k = rng.randint(1, 4)
            n = rng.randint(k + 2, 10)
            candidates = random_candidate_set(rng, rng.randint(1, 4), k, n)
            rows = random_matrix(rng, rng.randint(1, 4), n)
            mdcd = detect_mdcd(rows, candidates)
            maxlog = detect_maxlog(rows, candidates)
            assert maxlog.chosen_index == mdcd.chosen_index
            assert maxlog.scores == mdcd.scores
            assert maxlog.tie == mdcd.tie
