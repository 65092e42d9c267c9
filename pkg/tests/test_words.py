import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from palindromic.words import (
    FreeWord,
    MalformedInputError,
    ParseError,
    RankMismatchError,
    exponent_sum,
    exponent_vector,
    format_word,
    free_reduce,
    invert,
    is_palindrome,
    multiply,
    parse_word,
    reverse,
    words_of_length,
)
from strategies import free_words, raw_letters

U_TEXT = "x3^2 x1^-2 x3^5 x1^2"


def naive_reduce(letters):
    """Oracle: cancel the first adjacent inverse pair until none is left."""
    s = list(letters)
    changed = True
    while changed:
        changed = False
        for k in range(len(s) - 1):
            if s[k] == -s[k + 1]:
                del s[k : k + 2]
                changed = True
                break
    return tuple(s)


def shuffled_reduce(letters, rng):
    """Oracle: cancel a randomly chosen adjacent inverse pair each step."""
    s = list(letters)
    while True:
        spots = [k for k in range(len(s) - 1) if s[k] == -s[k + 1]]
        if not spots:
            return tuple(s)
        k = rng.choice(spots)
        del s[k : k + 2]


class TestCodec:
    def test_tokens(self):
        assert parse_word("x1 x2^-1 x1", 2).letters == ((1, 1), (2, -1), (1, 1))

    def test_cancellation(self):
        assert parse_word("x1 x1^-1", 3).is_identity()

    def test_reference_word_length(self):
        assert len(parse_word(U_TEXT, 3)) == 11

    @pytest.mark.parametrize("text", ["", "1", "  "])
    def test_identity_spellings(self, text):
        assert parse_word(text, 2) == FreeWord.identity(2)

    def test_identity_prints_as_one(self):
        assert format_word(FreeWord.identity(4)) == "1"

    @pytest.mark.parametrize("text", ["x0", "x4", "x1 x9^2"])
    def test_index_out_of_range(self, text):
        with pytest.raises(MalformedInputError):
            parse_word(text, 3)

    @pytest.mark.parametrize("text, pos", [("x1 y2", 3), ("x1^", 0), ("x1 x2 x1^0", 6), ("x1^+-2", 0)])
    def test_parse_error_position(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_word(text, 3)
        assert info.value.position == pos

    @given(free_words(4))
    def test_round_trip(self, w):
        assert parse_word(format_word(w), 4) == w

    def test_explicit_plus_sign(self):
        assert parse_word("x2^+3", 2) == FreeWord(2, [2, 2, 2])


class TestReduction:
    @given(raw_letters(3, 20))
    def test_matches_naive_oracle(self, syms):
        assert FreeWord(3, syms).syms == naive_reduce(syms)

    @given(raw_letters(2, 20), st.integers(0, 2**32))
    def test_order_independent(self, syms, seed):
        assert shuffled_reduce(syms, random.Random(seed)) == free_reduce(syms)

    @given(raw_letters(3, 20))
    def test_reduced_invariant(self, syms):
        w = FreeWord(3, syms)
        assert all(a != -b for a, b in zip(w.syms, w.syms[1:]))

    def test_pair_letters_accepted(self):
        assert FreeWord(2, [(1, 1), (2, -1)]) == FreeWord(2, [1, -2])


class TestGroupLaws:
    def test_forced_cancellation(self):
        assert multiply(parse_word("x1 x2", 3), parse_word("x2^-1 x3", 3)) == parse_word("x1 x3", 3)

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatchError):
            FreeWord(2, [1]) * FreeWord(3, [1])

    @given(free_words(), free_words(), free_words())
    def test_associative(self, u, v, w):
        assert (u * v) * w == u * (v * w)

    @given(free_words())
    def test_identity_and_inverse(self, u):
        e = FreeWord.identity(3)
        assert u * e == u == e * u
        assert (u * invert(u)).is_identity() and (invert(u) * u).is_identity()
        assert invert(invert(u)) == u

    def test_invert_example(self):
        assert invert(parse_word("x1 x2^-1", 2)) == parse_word("x2 x1^-1", 2)
        assert invert(FreeWord.identity(2)).is_identity()

    @given(free_words(2, 6), st.integers(-4, 4))
    def test_power(self, u, k):
        assert exponent_vector(u**k) == [k * v for v in exponent_vector(u)]

    @given(free_words(), free_words())
    def test_length_bound(self, u, v):
        assert len(u * v) <= len(u) + len(v)


class TestReverse:
    def test_examples(self):
        assert reverse(parse_word("x1 x2^-1", 2)) == parse_word("x2^-1 x1", 2)
        assert str(reverse(parse_word(U_TEXT, 3))) == "x1^2 x3^5 x1^-2 x3^2"

    @given(free_words(), free_words())
    def test_anti_automorphism(self, u, v):
        assert reverse(u * v) == reverse(v) * reverse(u)

    @given(free_words())
    def test_letterwise_oracle(self, u):
        assert reverse(u).syms == tuple(reversed(u.syms))


class TestPalindrome:
    @pytest.mark.parametrize("text, expected", [("x1 x2 x1", True), ("x1 x2", False), ("x1^2", True), ("1", True)])
    def test_examples(self, text, expected):
        assert is_palindrome(parse_word(text, 2)) is expected

    @given(free_words())
    def test_closed_under_inverse(self, u):
        assert is_palindrome(u) == is_palindrome(invert(u))

    @given(free_words(3, 6))
    def test_u_x_reverse_u(self, u):
        assert is_palindrome(u * FreeWord(3, [2]) * reverse(u))


class TestExponentSum:
    def test_reference_values(self):
        u = parse_word(U_TEXT, 3)
        assert exponent_sum(u, 1) == 0
        assert exponent_sum(u, 3) == 7
        assert exponent_sum(FreeWord.identity(3), 2) == 0

    def test_out_of_range(self):
        with pytest.raises(IndexError):
            exponent_sum(FreeWord.identity(2), 3)

    def test_additive_on_reference_word(self):
        u = parse_word(U_TEXT, 3)
        v = parse_word("x3^-1 x2 x1^4", 3)
        for j in (1, 2, 3):
            assert exponent_sum(u * v, j) == exponent_sum(u, j) + exponent_sum(v, j)

    @given(free_words(), free_words(), st.integers(1, 3))
    def test_homomorphism(self, u, v, j):
        assert exponent_sum(u * v, j) == exponent_sum(u, j) + exponent_sum(v, j)
        assert exponent_sum(invert(u), j) == -exponent_sum(u, j)


def test_words_of_length_counts():
    # 2n (2n-1)^(k-1) reduced words of length k
    for rank in (1, 2, 3):
        for k in range(1, 5):
            words = list(words_of_length(rank, k))
            assert len(words) == 2 * rank * (2 * rank - 1) ** (k - 1)
            assert len(set(words)) == len(words)
    assert list(words_of_length(2, 0)) == [FreeWord.identity(2)]
