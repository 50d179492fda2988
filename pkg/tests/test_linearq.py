from __future__ import annotations

import itertools
import random

import pytest

from asymcodes import (
    AlphabetSpec,
    CodeBook,
    MatrixModZq,
    codewords_of,
    concat_code,
    decode_concat,
    double_code,
    hamming_parity_check,
    is_t_code,
    lee_parity_check,
    min_asym_distance,
    min_hamming_distance,
    is_single_rq_correcting,
)
from asymcodes.linearq import nullspace, rank
from asymcodes.words import DecodeFailure, EnumerationCapExceeded

from conftest import book_from_strings
from reference_codes import CODE_5_27_Q3, LEE_5_2_PARTIAL_ROWS, TETRACODE


class TestMatrix:
    def test_validation(self):
        with pytest.raises(ValueError):
            MatrixModZq(3, ((1, 0), (0, 1)), "weird")
        with pytest.raises(ValueError):
            MatrixModZq(3, ((1, 0), (2, 0)), "parity")  # zero column
        m = MatrixModZq(3, ((4, -1),), "generator")
        assert m.rows == ((1, 2),)

    def test_text_round_trip(self):
        m = MatrixModZq(5, ((1, 2, 3), (0, 4, 1)), "parity")
        again = MatrixModZq.from_text(m.to_text())
        assert again == m
        assert m.to_text().splitlines()[0] == "5 2 3 parity"

    def test_rank_and_nullspace(self):
        H = hamming_parity_check(3, 2)
        assert rank(H) == 2
        G = nullspace(H)
        assert G.nrows == 2
        # every basis row is in the kernel
        for g in G.rows:
            for h in H.rows:
                assert sum(a * b for a, b in zip(g, h)) % 3 == 0


class TestParityChecks:
    def test_hamming_3_2(self):
        H = hamming_parity_check(3, 2)
        assert H.ncols == 4
        assert [H.column(j) for j in range(4)] == [(0, 1), (1, 0), (1, 1), (1, 2)]
        assert {str(w) for w in codewords_of(H)} == set(TETRACODE)
        assert min_hamming_distance(H) == 3

    def test_hamming_2_3(self):
        H = hamming_parity_check(2, 3)
        assert H.ncols == 7
        assert min_hamming_distance(H) == 3

    def test_hamming_5_2(self):
        H = hamming_parity_check(5, 2)
        assert H.ncols == 6
        assert min_hamming_distance(H) == 3

    def test_lee_5_2_partial_is_the_reference_matrix(self):
        H = lee_parity_check(5, 2, full=False)
        assert H.rows == LEE_5_2_PARTIAL_ROWS

    def test_lee_5_2_full(self):
        H = lee_parity_check(5, 2, full=True)
        assert H.ncols == 12
        assert H.column(0) == (0, 1) and H.column(1) == (0, 2)

    def test_lee_3_2_full_equals_hamming(self):
        assert lee_parity_check(3, 2, full=True).rows == hamming_parity_check(3, 2).rows

    def test_lee_rejects_even_q(self):
        with pytest.raises(ValueError):
            lee_parity_check(2, 3)

    def test_lee_full_lengths_and_condition(self):
        for q, r in [(3, 2), (5, 1), (5, 2), (7, 1), (7, 2)]:
            H = lee_parity_check(q, r, full=True)
            assert H.ncols == (q**r - 1) // 2
            assert is_single_rq_correcting(H)


class TestRqCondition:
    def test_reference_matrix_passes(self):
        assert is_single_rq_correcting(MatrixModZq(5, LEE_5_2_PARTIAL_ROWS, "parity"))

    def test_plus_minus_collision(self):
        H = MatrixModZq(5, ((1, 4),), "parity")
        assert not is_single_rq_correcting(H)

    def test_repeated_column(self):
        H = MatrixModZq(5, ((1, 1), (2, 2)), "parity")
        assert not is_single_rq_correcting(H)


class TestCodewordsOf:
    def test_generator_enumeration(self):
        G = MatrixModZq(3, ((0, 1, 1, 1), (1, 0, 1, 2)), "generator")
        book = codewords_of(G)
        assert len(book) == 9
        assert (0, 0, 0, 0) in book and (0, 1, 1, 1) in book and (1, 0, 1, 2) in book

    def test_zero_generator(self):
        G = MatrixModZq(3, ((0, 0, 0),), "generator")
        assert [w.symbols for w in codewords_of(G)] == [(0, 0, 0)]

    def test_cap(self):
        G = MatrixModZq(3, tuple((0,) * 30 for _ in range(30)), "generator")
        with pytest.raises(EnumerationCapExceeded):
            codewords_of(G, cap=100)

    def test_identity_distance_one(self):
        G = MatrixModZq(3, ((1, 0), (0, 1)), "generator")
        assert min_hamming_distance(G) == 1

    def test_repetition_distance_three(self):
        assert min_hamming_distance(MatrixModZq(3, ((1, 1, 1),), "generator")) == 3


def outer_repetition():
    return MatrixModZq(3, ((1, 1, 1),), "generator")


class TestConcat:
    def test_shortened_5_3_exact_words(self):
        cc = concat_code(outer_repetition(), shorten_to_odd=True)
        assert (cc.length, cc.dimension) == (5, 3)
        book = cc.codebook()
        assert {str(w) for w in book} == set(CODE_5_27_Q3)
        assert is_t_code(book, 1)

    def test_8_6_code(self):
        cc = concat_code(nullspace(hamming_parity_check(3, 2)))
        assert (cc.length, cc.dimension) == (8, 6)
        book = cc.codebook()
        assert len(book) == 3**6
        assert is_t_code(book, 1)

    def test_7_5_code(self):
        cc = concat_code(nullspace(hamming_parity_check(3, 2)), shorten_to_odd=True)
        assert (cc.length, cc.dimension) == (7, 5)
        assert is_t_code(cc.codebook(), 1)

    def test_20_18_parameters(self):
        cc = concat_code(nullspace(lee_parity_check(5, 2, full=False)))
        assert (cc.length, cc.dimension) == (20, 18)
        assert cc.q == 5

    def test_rejects_bad_outer(self):
        # identity outer code has Hamming distance 1
        bad = MatrixModZq(3, ((1, 0), (0, 1)), "generator")
        with pytest.raises(ValueError):
            concat_code(bad)

    def test_linearity_and_size(self):
        cc = concat_code(outer_repetition())
        book = cc.codebook()
        assert len(book) == 3 ** cc.dimension
        rows = book.symbol_set
        sample = random.Random(0).sample(sorted(rows), 12)
        for a in sample:
            for b in sample:
                s = tuple((x + y) % 3 for x, y in zip(a, b))
                assert s in rows

    def test_coset_structure(self):
        # restricted to one outer word, the pairs are exactly (a, a + c_j)
        cc = concat_code(outer_repetition())
        book = cc.codebook()
        outer_words = {(0, 0, 0), (1, 1, 1), (2, 2, 2)}
        for w in book.symbol_rows:
            diffs = tuple((w[2 * j + 1] - w[2 * j]) % 3 for j in range(3))
            assert diffs in outer_words

    def test_encode_matches_generator(self):
        cc = concat_code(outer_repetition())
        rng = random.Random(4)
        book = cc.codebook()
        for _ in range(20):
            msg = tuple(rng.randrange(3) for _ in range(cc.dimension))
            assert cc.encode(msg) in book


class TestDecodeConcat:
    def test_clean_word_unchanged(self):
        cc = concat_code(nullspace(hamming_parity_check(3, 2)))
        word = cc.encode((1, 2, 0, 1, 0, 2))
        assert decode_concat(cc.outer_check, word) == word

    def test_exhaustive_single_error_sweep_8_6(self):
        cc = concat_code(nullspace(hamming_parity_check(3, 2)))
        book = cc.codebook()
        for w in book.symbol_rows:
            for pos in range(8):
                y = list(w)
                y[pos] = (y[pos] - 1) % 3
                assert decode_concat(cc.outer_check, tuple(y)) == w

    def test_exhaustive_single_error_sweep_shortened(self):
        cc = concat_code(outer_repetition(), shorten_to_odd=True)
        book = cc.codebook()
        for w in book.symbol_rows:
            for pos in range(5):
                y = list(w)
                y[pos] = (y[pos] - 1) % 3
                assert decode_concat(cc.outer_check, tuple(y), shortened=True) == w

    def test_double_error_never_silently_correct(self):
        # beyond design distance: either an explicit failure or a visible
        # miscorrection, never the sent word back
        for outer, length in [
            (nullspace(hamming_parity_check(3, 2)), 8),
            (outer_repetition(), 6),
        ]:
            cc = concat_code(outer)
            book = cc.codebook()
            rng = random.Random(8)
            for w in rng.sample(book.symbol_rows, 60):
                pos = rng.sample(range(length), 2)
                y = list(w)
                for p in pos:
                    y[p] = (y[p] - 1) % 3
                try:
                    got = decode_concat(cc.outer_check, tuple(y))
                except DecodeFailure:
                    continue
                assert got != w

    def test_double_error_failures_occur_for_non_perfect_code(self):
        # the [6,4]_3 code leaves syndromes unmatched by any single error
        cc = concat_code(outer_repetition())
        book = cc.codebook()
        rng = random.Random(9)
        flagged = 0
        for w in rng.sample(book.symbol_rows, 60):
            pos = rng.sample(range(6), 2)
            y = list(w)
            for p in pos:
                y[p] = (y[p] - 1) % 3
            try:
                decode_concat(cc.outer_check, tuple(y))
            except DecodeFailure:
                flagged += 1
        assert flagged > 0


class TestDouble:
    def test_examples(self):
        cc = concat_code(outer_repetition(), shorten_to_odd=True)
        doubled = double_code(cc.codebook())
        assert doubled.n == 10 and len(doubled) == 27
        assert min_asym_distance(doubled) == 4

    def test_single_word(self):
        c = book_from_strings(["0"], q=3)
        assert [w.symbols for w in double_code(c)] == [(0, 0)]

    def test_doubling_exactness_random(self):
        rng = random.Random(12)
        for _ in range(25):
            q = rng.choice([2, 3, 4])
            n = rng.randrange(2, 5)
            pool = list(itertools.product(range(q), repeat=n))
            rows = rng.sample(pool, rng.randrange(2, 7))
            c = CodeBook.from_symbols(AlphabetSpec.uniform(q, n), rows)
            assert min_asym_distance(double_code(c)) == 2 * min_asym_distance(c)
