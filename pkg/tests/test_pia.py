import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palindromic.endo import AutWord, Endomorphism, alpha, compose, evaluate, mu, t
from palindromic.pia import (
    ES2,
    MU2,
    PiA2Element,
    ResourceLimitError,
    SignedPermutation,
    center_scan,
    collins_relations,
    es2_act,
    es2_element,
    generator,
    generators,
    pia2_normal_form,
    random_autword,
    verify_action,
    verify_relations,
)
from palindromic.words import FreeWord
from strategies import aut_words, free_words


def all_signed_perms(n):
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            yield SignedPermutation(perm, signs)


def E(n, *images):
    return Endomorphism.from_strings(n, list(images))


class TestGenerators:
    def test_examples(self):
        assert generator(3, mu(2, 3)) == E(3, "x1", "x3 x2 x3", "x3")
        assert generator(2, alpha(1)) == E(2, "x2", "x1")
        assert generator(3, t(2)) == E(3, "x1", "x2^-1", "x3")
        assert generator(3, "m31") == E(3, "x1", "x2", "x1 x3 x1")

    @pytest.mark.parametrize("bad", ["m14", "a34", "t4"])
    def test_invalid(self, bad):
        with pytest.raises(ValueError):
            generator(3, bad)

    def test_generator_list(self):
        assert [str(g) for g in generators(2)] == ["m12", "m21", "t1", "t2", "a12"]


class TestSignedPermutation:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_group_order(self, n):
        elems = set(all_signed_perms(n))
        assert len(elems) == 2**n * [1, 1, 2, 6][n]

    def test_group_laws_rank3(self):
        elems = list(all_signed_perms(3))
        rng = random.Random(3)
        ident = SignedPermutation.identity(3)
        for _ in range(300):
            a, b, c = rng.choice(elems), rng.choice(elems), rng.choice(elems)
            assert (a * b) * c == a * (b * c)
            assert a * a.inverse() == ident == a.inverse() * a

    def test_matches_endomorphisms(self):
        elems = list(all_signed_perms(3))
        for a in elems:
            assert evaluate(a.to_autword()) == a.to_endomorphism()
        for a, b in itertools.islice(itertools.product(elems, elems), 0, None, 7):
            assert (a * b).to_endomorphism() == compose(a.to_endomorphism(), b.to_endomorphism())

    def test_es2_names_and_orders(self):
        assert sorted(ES2) == sorted(["id", "s", "d", "sd", "r", "sr", "dr", "sdr"])
        orders = {k: v.order() for k, v in ES2.items()}
        assert orders == {"id": 1, "s": 2, "d": 2, "sd": 2, "r": 2, "sr": 4, "dr": 4, "sdr": 2}
        assert ES2["sr"] ** 2 == ES2["sd"] == ES2["dr"] ** 2
        assert ES2["r"] * ES2["s"] * ES2["r"] == ES2["d"]

    def test_aliases(self):
        assert es2_element("sigma") == ES2["s"] == es2_element("σ")
        assert es2_element("rho") == ES2["r"]


class TestRelations:
    def test_counts(self):
        assert len(verify_relations(3)) == 9
        assert verify_relations(2) == []
        kinds = [k for k, _, _ in collins_relations(3)]
        assert kinds.count("long") == 6

    @pytest.mark.parametrize("n", [3, 4])
    def test_all_pass(self, n):
        assert all(c.passed for c in verify_relations(n))

    def test_report_json(self):
        row = verify_relations(3)[0].to_json()
        assert set(row) == {"relation", "lhs_word", "rhs_word", "pass"}

    def test_broken_relation_detected(self):
        # oracle sanity: the long relation without the inverse fails
        lhs = evaluate(AutWord.parse("m13 m23 m12", 3))
        assert lhs != evaluate(AutWord.parse("m12 m23 m13", 3))

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_action(self, n):
        assert all(c.passed for c in verify_action(n))

    def test_action_examples(self):
        names = {c.relation: c.passed for c in verify_action(3)}
        assert names["a12 m13 a12 = m23"]
        assert names["t3 m12 t3 = m12"]
        assert {c.relation: c.passed for c in verify_action(2)}["t1 m12 t1 = m12^-1"]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_t_central_on_generators(self, n):
        tn = evaluate(AutWord(n, [(t(i), 1) for i in range(1, n + 1)]))
        for g in generators(n):
            e = generator(n, g)
            assert compose(tn, e) == compose(e, tn)


class TestCenter:
    def test_rank2(self):
        found = center_scan(2, 2)
        assert [str(w) for w in found] == ["1", "t1 t2"]

    def test_rank3(self):
        assert [str(w) for w in center_scan(3, 3)] == ["1", "t1 t2 t3"]

    def test_t_squared(self):
        t3 = evaluate(AutWord.parse("t1 t2 t3", 3))
        assert compose(t3, t3).is_identity()

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            center_scan(3, 8, cap=1000)


def random_pia2(rng, length):
    return random_autword(rng, 2, length)


class TestNormalForm:
    def test_examples(self):
        assert str(pia2_normal_form(AutWord.parse("t1 m12", 2))) == "m12^-1 . s"
        assert str(pia2_normal_form(AutWord.parse("m12 t1", 2))) == "m12 . s"
        assert str(pia2_normal_form(AutWord.parse("a12 m12 a12", 2))) == "m21"

    def test_sound_on_random_words(self):
        rng = random.Random(11)
        for _ in range(1000):
            w = random_pia2(rng, rng.randint(0, 12))
            assert pia2_normal_form(w).evaluate() == evaluate(w)

    def test_unique(self):
        rng = random.Random(12)
        seen = {}
        for _ in range(600):
            g = pia2_normal_form(random_pia2(rng, rng.randint(0, 7)))
            e = g.evaluate()
            if e in seen:
                assert seen[e] == g
            seen[e] = g
        # distinct pairs give distinct automorphisms on every (f, lam) with |f| <= 3
        elems = [PiA2Element(f, lam) for f in _short_words(3) for lam in ES2.values()]
        assert len({g.evaluate() for g in elems}) == len(elems)

    @settings(max_examples=150)
    @given(aut_words(2, 8), aut_words(2, 8))
    def test_product(self, u, v):
        a, b = pia2_normal_form(u), pia2_normal_form(v)
        assert a * b == pia2_normal_form(u * v)
        assert (a * b).evaluate() == compose(a.evaluate(), b.evaluate())
        assert (a * a.inverse()).is_identity()


def _short_words(k):
    from palindromic.words import words_of_length

    for n in range(k + 1):
        yield from words_of_length(2, n)


class TestAction:
    def test_examples(self):
        f = PiA2Element.make("m12 m21").f
        assert es2_act(f, ES2["s"]) == PiA2Element.make("m12^-1 m21^-1").f
        assert es2_act(PiA2Element.make("m12").f, ES2["r"]) == PiA2Element.make("m21").f
        assert es2_act(f, ES2["id"]) == f

    @given(free_words(2, 8), st.sampled_from(sorted(ES2)))
    def test_consistent_with_conjugation(self, f, name):
        lam = ES2[name]
        fw = AutWord(2, [(MU2[i - 1], e) for i, e in f.syllables()])
        conj = lam.inverse().to_autword() * fw * lam.to_autword()
        acted = es2_act(f, lam)
        assert evaluate(AutWord(2, [(MU2[i - 1], e) for i, e in acted.syllables()])) == evaluate(conj)


def test_pia2_power_and_identity():
    g = PiA2Element.make("m12", "r")
    assert (g**2).is_identity() is False
    assert (g**0).is_identity()
    assert PiA2Element.identity().evaluate().is_identity()
    assert g.to_json() == {"f": "m12", "lambda": "r"}
    assert FreeWord.identity(2) == PiA2Element.make().f
