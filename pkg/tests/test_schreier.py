import csv
import io
import itertools

import pytest

from palindromic.endo import AutWord, evaluate, is_IA
from palindromic.schreier import (
    CSV_HEADER,
    MU3,
    CosetRep,
    comm,
    enumerate_and_verify,
    expected_form,
    fullarton_check,
    ia_filter,
    listed_ia_forms,
    mu3,
    mu_str,
    ptg_exhaustive,
    ptg_sampler,
    schreier_gen,
    table,
    table_csv,
    tilde,
    to_autword,
)
from palindromic.words import FreeWord


def bits(*names):
    eps = [0] * 6
    for n in names:
        eps[[str(g) for g in MU3].index(n)] = 1
    return CosetRep(tuple(eps))


@pytest.fixture(scope="module")
def rows():
    return table()


def naive_tilde(text):
    # exponent sums mod 2 straight from the textual word
    sums = dict.fromkeys((str(g) for g in MU3), 0)
    for tok in text.split():
        name, _, exp = tok.partition("^")
        sums[name] += int(exp or 1)
    return tuple(sums[str(g)] % 2 for g in MU3)


class TestTilde:
    @pytest.mark.parametrize(
        "word",
        ["m12", "m12^2", "m12 m21^-1 m13", "m32^-3 m31 m32", "m23 m13^-1 m31 m32 m12 m21^-1"],
    )
    def test_examples(self, word):
        assert tilde(AutWord.parse(word, 3)).eps == naive_tilde(word)

    def test_identity(self):
        assert tilde(FreeWord.identity(6)).size == 0

    def test_rejects_non_mu(self):
        with pytest.raises(ValueError):
            tilde(AutWord.parse("t1", 3))

    def test_coset_rep(self):
        lam = bits("m12", "m13")
        assert str(lam) == "101000"
        assert lam.factors == [1, 3]
        assert lam.flip(1) == bits("m13")
        assert len(CosetRep.all()) == 64
        with pytest.raises(ValueError):
            CosetRep((0, 1))


class TestGenerators:
    def test_examples(self):
        m12, m21 = mu3(1, 2), mu3(2, 1)
        assert schreier_gen(bits("m12"), "m12").word == m12 * m12
        assert schreier_gen(bits("m21"), "m12").word == comm(~m21, ~m12)
        assert schreier_gen(bits("m12"), "m21").word.is_identity()

    def test_expected_examples(self):
        m12, m21, m13 = mu3(1, 2), mu3(2, 1), mu3(1, 3)
        assert expected_form(bits(), "m32").is_identity()
        assert expected_form(bits("m12"), "m12") == m12 * m12
        assert expected_form(bits("m21"), "m12") == comm(~m21, ~m12)
        # a = g_r in the middle of lambda
        lam = bits("m12", "m21", "m13")
        w = expected_form(lam, "m21")
        assert w == m12 * (m21 * m13 * m21 * ~m13) * ~m12

    def test_definition_directly(self):
        # S = lam a (tilde(lam a))^-1 computed from text, for every pair
        for lam in CosetRep.all()[::5]:
            for k, a in enumerate(MU3, start=1):
                la = lam.word() * FreeWord(6, [k])
                rep = tilde(la).word()
                assert schreier_gen(lam, a).word == la * ~rep


class TestTable:
    def test_enumerate(self, rows):
        r = enumerate_and_verify(rows)
        assert r["pass"]
        assert r["total"] == 384
        assert r["mismatch_count"] == 0
        assert r["word_mismatch_count"] == 0
        assert r["cocycle_failures"] == 0
        assert r["odd_exponent_words"] == []

    def test_match_checked_on_automorphisms(self, rows):
        for row in rows[::17]:
            assert evaluate(to_autword(row.expected)) == evaluate(row.gen.autword)

    def test_csv(self, rows):
        text = table_csv(rows)
        parsed = list(csv.reader(io.StringIO(text)))
        assert parsed[0] == CSV_HEADER
        assert len(parsed) == 385
        assert all(r[5] == "1" for r in parsed[1:])

    def test_json_row(self, rows):
        out = rows[7].to_json()
        assert set(out) >= {"eps", "a", "word", "expected", "match", "is_IA"}


class TestIAFilter:
    def test_counts(self, rows):
        r = ia_filter(rows)
        assert r["pass"]
        assert r["trivial_count"] + r["ia_nontrivial_count"] + r["non_ia_count"] == 384
        assert r["listed_forms"] == 19
        assert r["ia_distinct"] == r["listed_distinct"] == 19
        assert r["missing_from_computed"] == [] and r["extra_in_computed"] == []
        assert r["all_non_ia_witnessed"]

    def test_listed_forms_are_ia(self):
        for w in listed_ia_forms():
            e = evaluate(to_autword(w))
            assert is_IA(e) and not e.is_identity()

    def test_non_ia_have_violation(self, rows):
        for row in rows:
            assert (row.violation is None) == row.is_IA


class TestFullarton:
    def test_check(self):
        r = fullarton_check()
        assert r["pass"]
        assert r["factorization_holds"] and r["words_equal"]
        assert r["commutator_is_IA"]

    def test_reading_conventions(self):
        r = fullarton_check()
        assert not r["mu_is_IA_left_to_right"]
        assert r["mu_matrix_left_to_right"] == [[529, -312, -56], [-680, 401, 72], [-312, 184, 33]]
        assert r["mu_is_IA_right_to_left"] and r["mu_right_to_left_even"]


class TestPTG:
    def test_sampler(self):
        r = ptg_sampler(300, 8, seed=1)
        assert r["pass"] and r["count"] == 300

    def test_sampler_reproducible(self):
        assert ptg_sampler(200, 6, seed=3) == ptg_sampler(200, 6, seed=3)

    def test_sampler_args(self):
        with pytest.raises(ValueError):
            ptg_sampler(10, 0)

    def test_exhaustive(self):
        r = ptg_exhaustive(4)
        assert r["pass"]
        assert r["words"] == sum(12 * 11 ** (k - 1) for k in range(1, 5))
        assert r["ia_count"] > 0

    def test_exhaustive_oracle_small(self):
        # brute force over reduced words of length <= 3 through evaluate
        letters = [s * k for k in range(1, 7) for s in (1, -1)]
        ia = 0
        for n in range(1, 4):
            for syms in itertools.product(letters, repeat=n):
                if any(a == -b for a, b in zip(syms, syms[1:])):
                    continue
                w = FreeWord(6, list(syms))
                ia += is_IA(evaluate(to_autword(w)))
        assert ptg_exhaustive(3)["ia_count"] == ia

    def test_mu_str(self):
        assert mu_str(mu3(1, 2) * ~mu3(3, 2)) == "m12 m32^-1"
