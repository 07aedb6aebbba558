import itertools
import math

import pytest
from hypothesis import given, strategies as st

from grainlab.codes import (
    Code,
    construct_doubling,
    construct_greedy_known,
    construct_hamming_prefix,
    decode_doubling,
    decode_known_pattern,
    hamming_prefix_size,
    load_code,
    parse_code_text,
    save_code,
    verify_grain_correcting,
    verify_known_pattern,
    verify_list_decodable,
)
from grainlab.errors import CapExceeded, GrainlabError, PreconditionError
from grainlab.model import (
    Word,
    apply_grains,
    count_error_vectors,
    enumerate_error_vectors,
)


def words(n):
    return [Word(n, v) for v in range(1 << n)]


# ---------------------------------------------------------------------------
# bit-doubling construction
# ---------------------------------------------------------------------------


class TestDoubling:
    def test_n4(self):
        code = construct_doubling(4)
        assert {str(w) for w in code.words} == {"0000", "0011", "1100", "1111"}

    def test_n1(self):
        assert {str(w) for w in construct_doubling(1).words} == {"0", "1"}

    def test_n5_prefixes_n4(self):
        inner = {str(w) for w in construct_doubling(4).words}
        code = construct_doubling(5)
        assert code.size == 8
        for w in code.words:
            assert str(w)[1:] in inner

    @pytest.mark.parametrize("n", range(1, 13))
    def test_size(self, n):
        assert construct_doubling(n).size == 2 ** ((n + 1) // 2)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_corrects_any_budget(self, n):
        code = construct_doubling(n)
        assert verify_grain_correcting(code, n // 2)

    def test_even_positions_pairwise_equal(self):
        for w in construct_doubling(8).words:
            for i in range(2, 9, 2):
                assert w.bit(i - 1) == w.bit(i)


class TestDecodeDoubling:
    def test_example(self):
        assert str(decode_doubling(Word.parse("0011"))) == "01"

    def test_n1_empty_message(self):
        assert decode_doubling(Word.parse("0")) is None

    @pytest.mark.parametrize("n", range(2, 11))
    def test_recovers_message_under_every_pattern(self, n):
        code = construct_doubling(n)
        for c in code.words:
            expected = decode_doubling(c)
            for e in enumerate_error_vectors(n, n // 2):
                assert decode_doubling(apply_grains(c, e)) == expected


# ---------------------------------------------------------------------------
# Hamming-prefix construction
# ---------------------------------------------------------------------------


class TestHammingPrefix:
    def test_m2_is_prefixed_repetition(self):
        code = construct_hamming_prefix(2)
        assert code.n == 4 and code.size == 4
        assert {str(w) for w in code.words} == {"0000", "0111", "1000", "1111"}

    def test_m3_size(self):
        code = construct_hamming_prefix(3)
        assert code.n == 8
        assert code.size == 2**8 // 8 == hamming_prefix_size(3)

    @pytest.mark.parametrize("m", [2, 3])
    def test_corrects_one_grain(self, m):
        assert verify_grain_correcting(construct_hamming_prefix(m), 1)

    def test_m4_beats_sphere_packing(self):
        # 2^16/16 codewords versus the substitution-error packing count
        assert hamming_prefix_size(4) == 4096
        assert 4096 > (1 << 16) // 17

    def test_inner_code_has_distance_3(self):
        code = construct_hamming_prefix(2)
        inner = {str(w)[1:] for w in code.words}
        for a, b in itertools.combinations(inner, 2):
            assert sum(x != y for x, y in zip(a, b)) >= 3

    def test_m_range(self):
        with pytest.raises(PreconditionError):
            construct_hamming_prefix(1)
        with pytest.raises(PreconditionError):
            construct_hamming_prefix(7)

    def test_materialization_cap(self):
        with pytest.raises(CapExceeded):
            construct_hamming_prefix(5)
        # the size formula stays available past the cap
        assert hamming_prefix_size(5) == 2**32 // 32

    def test_m4_size_and_validity_spot_check(self):
        code = construct_hamming_prefix(4)
        assert code.size == 4096
        # spot-check a sample of pairs for 1-grain collisions
        sample = code.sorted_words()[::97]
        from grainlab.model import confusable

        for a, b in itertools.combinations(sample, 2):
            assert not confusable(a, b, 1)


# ---------------------------------------------------------------------------
# greedy known-pattern construction
# ---------------------------------------------------------------------------


class TestGreedyKnown:
    def test_budget_zero_full_space(self):
        assert construct_greedy_known(4, 0).size == 16

    def test_5_1_size_bound(self):
        code = construct_greedy_known(5, 1)
        assert code.size >= math.ceil(32 / 5)
        assert verify_known_pattern(code, 1)

    @pytest.mark.parametrize("n,t", [(6, 1), (8, 1), (8, 2), (10, 1)])
    def test_packing_guarantee(self, n, t):
        code = construct_greedy_known(n, t)
        assert code.size * count_error_vectors(n, t) >= 2**n
        assert verify_known_pattern(code, t)

    def test_custom_order_changes_code_but_not_validity(self):
        base = construct_greedy_known(6, 1)
        reordered = construct_greedy_known(6, 1, order=list(reversed(range(64))))
        assert verify_known_pattern(reordered, 1)
        assert reordered.size * count_error_vectors(6, 1) >= 64
        assert base.words != reordered.words

    def test_bad_order_rejected(self):
        with pytest.raises(PreconditionError):
            construct_greedy_known(3, 1, order=[0, 1, 2])

    def test_cap(self):
        with pytest.raises(CapExceeded):
            construct_greedy_known(21, 1)


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------


class TestVerifiers:
    def test_shared_image_pair_rejected(self):
        code = Code(2, frozenset({Word.parse("00"), Word.parse("01")}))
        assert not verify_grain_correcting(code, 1)

    def test_single_word_code(self):
        code = Code(6, frozenset({Word.parse("010101")}))
        assert verify_grain_correcting(code, 3)

    def test_grain_correcting_implies_list_1(self):
        for n, t in ((5, 1), (6, 2)):
            code = construct_doubling(n)
            assert verify_grain_correcting(code, t)
            assert verify_list_decodable(code, t, 1)

    def test_list_2_accepts_the_pair(self):
        code = Code(2, frozenset({Word.parse("00"), Word.parse("01")}))
        assert verify_list_decodable(code, 1, 2)
        assert not verify_list_decodable(code, 1, 1)

    def test_known_pattern_pair_counterexample(self):
        # the pattern with support {2} maps both 00 and 01 to 00
        code = Code(2, frozenset({Word.parse("00"), Word.parse("01")}))
        assert not verify_known_pattern(code, 1)

    def test_known_pattern_budget_zero(self):
        code = Code(3, frozenset({Word.parse("000"), Word.parse("111")}))
        assert verify_known_pattern(code, 0)

    @given(st.integers(min_value=2, max_value=7), st.data())
    def test_grain_correcting_implies_known_pattern(self, n, data):
        pool = words(n)
        size = data.draw(st.integers(min_value=1, max_value=min(8, len(pool))))
        chosen = data.draw(
            st.lists(
                st.sampled_from(pool), min_size=size, max_size=size, unique=True
            )
        )
        code = Code(n, frozenset(chosen))
        if verify_grain_correcting(code, 1):
            assert verify_known_pattern(code, 1)


# ---------------------------------------------------------------------------
# known-pattern decoding
# ---------------------------------------------------------------------------


class TestDecodeKnownPattern:
    @pytest.mark.parametrize("n,t", [(6, 1), (8, 1), (8, 2)])
    def test_round_trip(self, n, t):
        code = construct_greedy_known(n, t)
        for c in code.sorted_words():
            for e in enumerate_error_vectors(n, t):
                assert decode_known_pattern(code, apply_grains(c, e), e) == c

    def test_zero_pattern_is_membership(self):
        code = construct_greedy_known(5, 1)
        e0 = enumerate_error_vectors(5, 0)[0]
        member = code.sorted_words()[0]
        assert decode_known_pattern(code, member, e0) == member
        outside = next(w for w in words(5) if w not in code.words)
        with pytest.raises(GrainlabError):
            decode_known_pattern(code, outside, e0)

    def test_ambiguous_code_reports_failure(self):
        code = Code(2, frozenset({Word.parse("00"), Word.parse("01")}))
        e = enumerate_error_vectors(2, 1)[1]  # support {2}
        assert e.support == (2,)
        with pytest.raises(GrainlabError):
            decode_known_pattern(code, Word.parse("00"), e)


# ---------------------------------------------------------------------------
# code files
# ---------------------------------------------------------------------------


class TestCodeFiles:
    def test_round_trip(self, tmp_path):
        code = construct_doubling(6)
        path = tmp_path / "code.txt"
        save_code(code, path, header="doubling code, n=6")
        loaded = load_code(path)
        assert loaded.words == code.words
        assert loaded.n == code.n

    def test_comments_and_blanks_ignored(self):
        text = "# a comment\n\n0011  # trailing comment\n1100\n"
        code = parse_code_text(text)
        assert {str(w) for w in code.words} == {"0011", "1100"}

    def test_mixed_lengths_rejected(self):
        with pytest.raises(PreconditionError):
            parse_code_text("0011\n110\n")

    def test_duplicates_rejected(self):
        with pytest.raises(PreconditionError):
            parse_code_text("0011\n0011\n")

    def test_empty_rejected(self):
        with pytest.raises(PreconditionError):
            parse_code_text("# nothing here\n")
