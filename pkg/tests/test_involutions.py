import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palindromic.endo import AutWord, compose, evaluate
from palindromic.involutions import (
    REPRESENTATIVES,
    NotAnInvolutionError,
    class_invariant,
    classify,
    conjugate,
    fp_pattern,
    involution_census,
    is_involution,
    is_involution_by_squaring,
    swap_mu,
)
from palindromic.pia import ES2, PiA2Element, pia2_normal_form, random_autword
from palindromic.words import FreeWord, parse_word
from strategies import aut_words, free_words


def el(f, lam):
    return PiA2Element.make(f, lam)


def squares_to_identity(g):
    # independent oracle: square through the evaluated automorphism
    e = evaluate(g.to_autword())
    return compose(e, e).is_identity() and not e.is_identity()


class TestIsInvolution:
    @pytest.mark.parametrize(
        "f, lam, expected",
        [
            ("m12", "s", True),
            ("m12 m21^-1", "r", True),
            ("m12 m21", "s", False),
            ("", "s", True),
            ("", "id", False),
            ("m12 m21 m12", "d", True),
            ("m12", "sd", False),
            ("", "sd", True),
            ("", "sr", False),
            ("m12^3", "dr", False),
            ("m12 m21^-1", "sdr", True),
        ],
    )
    def test_examples(self, f, lam, expected):
        g = el(f, lam)
        assert is_involution(g) is expected
        assert squares_to_identity(g) is expected

    def test_identity_excluded(self):
        assert not is_involution_by_squaring(PiA2Element.identity())

    @settings(max_examples=300)
    @given(free_words(2, 8), st.sampled_from(sorted(ES2)))
    def test_criterion_matches_squaring(self, f, lam):
        g = PiA2Element(f, ES2[lam])
        assert is_involution(g, cross_check=False) == squares_to_identity(g)

    def test_swap_and_pattern(self):
        f = parse_word("x1 x2^-1", 2)
        assert swap_mu(f) == parse_word("x2 x1^-1", 2)
        assert fp_pattern(f)
        assert not fp_pattern(parse_word("x1 x2", 2))
        assert fp_pattern(FreeWord.identity(2))


class TestConjugate:
    def test_examples(self):
        s = REPRESENTATIVES["s"]
        assert conjugate(s, AutWord.parse("m12", 2)) == el("m12^-2", "s")
        assert conjugate(s, AutWord.parse("a12", 2)) == el("", "d")
        assert conjugate(el("m12", "s"), AutWord.parse("m12^-1", 2)) == el("m12^3", "s")

    @given(aut_words(2, 6), aut_words(2, 6))
    def test_agrees_with_automorphisms(self, g, h):
        ge = pia2_normal_form(g)
        c = conjugate(ge, h)
        assert c.evaluate() == evaluate(h.inverse() * g * h)


class TestClassify:
    def test_delta(self):
        cls = classify(el("", "d"))
        assert cls.name == "s"
        assert str(cls.conjugator) == "a12"

    def test_odd_centre(self):
        cls = classify(el("m12^3", "s"))
        assert cls.name == "m12 . s"
        assert str(cls.conjugator) == "m12"

    @pytest.mark.parametrize("name", sorted(REPRESENTATIVES))
    def test_representatives_fixed(self, name):
        assert classify(REPRESENTATIVES[name]).name == name

    def test_rejects_non_involution(self):
        with pytest.raises(NotAnInvolutionError):
            classify(el("m12 m21", "s"))
        with pytest.raises(NotAnInvolutionError):
            class_invariant(PiA2Element.identity())

    def test_conjugator_checked_independently(self):
        rng = random.Random(5)
        for name, rep in REPRESENTATIVES.items():
            for _ in range(40):
                h = random_autword(rng, 2, rng.randint(0, 8))
                g = pia2_normal_form(h.inverse() * rep.to_autword() * h)
                cls = classify(g)
                assert cls.name == name
                lhs = evaluate(cls.conjugator.inverse() * g.to_autword() * cls.conjugator)
                assert lhs == rep.evaluate()

    def test_json(self):
        out = classify(el("m12^3", "s")).to_json()
        assert out["representative"] == "m12 . s" and out["conjugator"] == "m12"


class TestInvariant:
    def test_examples(self):
        assert class_invariant(el("", "s")) == ("sigma", (0, 0))
        assert class_invariant(el("m12", "s")) == ("sigma", (1, 0))
        assert class_invariant(el("m21", "s")) == ("sigma", (0, 1))
        assert class_invariant(el("m12", "d")) == ("sigma", (0, 1))
        assert class_invariant(el("", "sd")) == ("sigma-delta", None)
        assert class_invariant(el("", "r")) == ("rho", None)

    def test_representatives_distinct(self):
        invs = [class_invariant(g) for g in REPRESENTATIVES.values()]
        assert len(set(invs)) == 5

    def test_stable_under_conjugation(self):
        rng = random.Random(8)
        for rep in REPRESENTATIVES.values():
            for _ in range(50):
                h = random_autword(rng, 2, rng.randint(0, 10))
                assert class_invariant(conjugate(rep, h)) == class_invariant(rep)


def test_small_census():
    report = involution_census(4)
    assert report.passed
    assert report.total == 8 * sum(1 if k == 0 else 4 * 3 ** (k - 1) for k in range(5))
    assert sum(report.class_counts.values()) == report.involutions
    assert set(report.class_counts) == set(REPRESENTATIVES)
