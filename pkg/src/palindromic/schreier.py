"""Reidemeister-Schreier generators of the commutator subgroup of EPiA_3.

EPiA_3 / EPiA_3' is (Z/2)^6, so the coset of a mu-word is its vector of
exponent sums mod 2.  The transversal Lambda_3 takes, for each bit vector
``eps``, the ordered product ``mu12^e1 mu21^e2 mu13^e3 mu23^e4 mu31^e5 mu32^e6``.
The generators are ``S(lam, a) = lam a (tilde(lam a))^-1`` for the 64
representatives and the six mu's.

Internally a mu-word is a :class:`FreeWord` of rank 6 whose letter ``k``
stands for ``MU3[k - 1]``.
"""

from __future__ import annotations

import csv
import io
import random
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .endo import AutWord, Endomorphism, Gen, abelianization_matrix, evaluate, free_to_autword, is_IA, mu, mu_order
from .words import FreeWord, exponent_vector

__all__ = [
    "MU3",
    "CosetRep",
    "SchreierGen",
    "tilde",
    "schreier_gen",
    "expected_form",
    "all_schreier_gens",
    "enumerate_and_verify",
    "listed_ia_forms",
    "ia_filter",
    "fullarton_check",
    "ptg_sampler",
    "ptg_exhaustive",
    "table",
    "table_csv",
    "TableRow",
]

MU3: tuple[Gen, ...] = tuple(mu_order(3))
_INDEX = {g: k for k, g in enumerate(MU3, start=1)}


def _gen_index(a: Gen | int | str) -> int:
    if isinstance(a, int):
        if not 1 <= a <= 6:
            raise ValueError(f"generator index {a} outside 1..6")
        return a
    if isinstance(a, str):
        a = next((g for g in MU3 if str(g) == a.strip()), None)
        if a is None:
            raise ValueError("expected one of " + ", ".join(map(str, MU3)))
    return _INDEX[a]


def _g(k: int, e: int = 1) -> FreeWord:
    return FreeWord.generator(6, k, e)


def _prod(words: Iterable[FreeWord]) -> FreeWord:
    out = FreeWord.identity(6)
    for w in words:
        out = out * w
    return out


def conj(x: FreeWord, h: FreeWord) -> FreeWord:
    """``x^h = h^-1 x h``."""
    return ~h * x * h


def comm(x: FreeWord, y: FreeWord) -> FreeWord:
    """``[x, y] = x^-1 y^-1 x y``."""
    return ~x * ~y * x * y


def to_autword(w: FreeWord) -> AutWord:
    return free_to_autword(w, MU3, 3)


def mu_str(w: FreeWord) -> str:
    return str(to_autword(w))


def as_mu_free(w: AutWord | FreeWord) -> FreeWord:
    if isinstance(w, FreeWord):
        if w.rank != 6:
            raise ValueError("mu-words are free words of rank 6")
        return w
    syms: list[int] = []
    for g, e in w.letters:
        if g not in _INDEX:
            raise ValueError(f"{g} is not a rank-3 mu generator")
        k = _INDEX[g]
        syms.extend([k if e > 0 else -k] * abs(e))
    return FreeWord(6, syms)


@dataclass(frozen=True, order=True)
class CosetRep:
    eps: tuple[int, ...]

    def __post_init__(self):
        if len(self.eps) != 6 or any(b not in (0, 1) for b in self.eps):
            raise ValueError("eps must be six bits")

    @property
    def size(self) -> int:
        return sum(self.eps)

    @property
    def factors(self) -> list[int]:
        """Indices of the generators in lam, increasing."""
        return [k for k, b in enumerate(self.eps, start=1) if b]

    def word(self) -> FreeWord:
        return _prod(_g(k) for k in self.factors)

    def flip(self, k: int) -> "CosetRep":
        bits = list(self.eps)
        bits[k - 1] ^= 1
        return CosetRep(tuple(bits))

    @classmethod
    def all(cls) -> list["CosetRep"]:
        return [cls(bits) for bits in product((0, 1), repeat=6)]

    def __str__(self) -> str:
        return "".join(map(str, self.eps))


def tilde(w: AutWord | FreeWord) -> CosetRep:
    """Coset representative: exponent sums mod 2."""
    return CosetRep(tuple(v % 2 for v in exponent_vector(as_mu_free(w))))


@dataclass(frozen=True)
class SchreierGen:
    lam: CosetRep
    a: int
    word: FreeWord
    endo: Endomorphism

    @property
    def a_gen(self) -> Gen:
        return MU3[self.a - 1]

    @property
    def autword(self) -> AutWord:
        return to_autword(self.word)


def schreier_gen(lam: CosetRep, a: Gen | int | str) -> SchreierGen:
    k = _gen_index(a)
    la = lam.word() * _g(k)
    word = la * ~tilde(la).word()
    return SchreierGen(lam, k, word, evaluate(to_autword(word)))


def expected_form(lam: CosetRep, a: Gen | int | str) -> FreeWord:
    """Closed-form generator by position of ``a`` among the factors of ``lam``.

    With ``lam = g_1 ... g_m`` in increasing order:

    * ``g_m < a``: trivial;
    * ``a = g_r``: ``(g_r g_r^(g_m^-1 ... g_(r+1)^-1))^(g_(r-1)^-1 ... g_1^-1)``;
    * ``g_r < a < g_(r+1)``: ``[g_m^-1 ... g_(r+1)^-1, a^-1]^(g_r^-1 ... g_1^-1)``.
    """
    k = _gen_index(a)
    gs = lam.factors
    if not gs or gs[-1] < k:
        return FreeWord.identity(6)

    def inv_desc(idx: list[int]) -> FreeWord:
        return _prod(_g(i, -1) for i in reversed(idx))

    if k in gs:
        r = gs.index(k)
        inner = _g(k) * conj(_g(k), inv_desc(gs[r + 1 :]))
        return conj(inner, inv_desc(gs[:r]))
    r = sum(1 for i in gs if i < k)
    return conj(comm(inv_desc(gs[r:]), _g(k, -1)), inv_desc(gs[:r]))


def all_schreier_gens() -> list[SchreierGen]:
    """The 384 generators in (lam, a) lexicographic order."""
    return [schreier_gen(lam, k) for lam in CosetRep.all() for k in range(1, 7)]


def _violation(e: Endomorphism) -> tuple[int, int] | None:
    """First ``(i, j)`` where the exponent sum of ``x_j`` in the image of ``x_i`` is off."""
    M = abelianization_matrix(e)
    for i in range(3):
        for j in range(3):
            if M[i, j] != (1 if i == j else 0):
                return i + 1, j + 1
    return None


@dataclass
class TableRow:
    gen: SchreierGen
    expected: FreeWord
    match: bool
    word_match: bool
    is_IA: bool
    is_trivial: bool
    even: bool
    cocycle: bool
    violation: tuple[int, int] | None

    def as_csv(self) -> list:
        g = self.gen
        return [
            str(g.lam),
            str(g.a_gen),
            g.lam.size,
            mu_str(g.word),
            mu_str(self.expected),
            int(self.match),
            int(self.is_IA),
            int(self.is_trivial),
        ]

    def to_json(self) -> dict:
        g = self.gen
        return {
            "eps": str(g.lam),
            "a": str(g.a_gen),
            "size": g.lam.size,
            "word": mu_str(g.word),
            "expected": mu_str(self.expected),
            "match": self.match,
            "word_match": self.word_match,
            "is_IA": self.is_IA,
            "is_trivial": self.is_trivial,
            "L_violation": list(self.violation) if self.violation else None,
        }


CSV_HEADER = ["eps", "a", "size", "word", "expected", "match", "is_IA", "is_trivial"]


def _row(g: SchreierGen) -> TableRow:
    exp = expected_form(g.lam, g.a)
    ia = is_IA(g.endo)
    la = g.lam.word() * _g(g.a)
    return TableRow(
        gen=g,
        expected=exp,
        match=evaluate(to_autword(exp)) == g.endo,
        word_match=exp == g.word,
        is_IA=ia,
        is_trivial=g.endo.is_identity(),
        even=all(v % 2 == 0 for v in exponent_vector(g.word)),
        cocycle=tilde(la) == g.lam.flip(g.a),
        violation=None if ia else _violation(g.endo),
    )


def table() -> list[TableRow]:
    return [_row(g) for g in all_schreier_gens()]


def enumerate_and_verify(rows: list[TableRow] | None = None) -> dict:
    rows = table() if rows is None else rows
    mismatches = [r.to_json() for r in rows if not r.match]
    zero_stratum = [r for r in rows if r.gen.lam.size == 0]
    return {
        "total": len(rows),
        "mismatches": mismatches,
        "mismatch_count": len(mismatches),
        "word_mismatch_count": sum(not r.word_match for r in rows),
        "odd_exponent_words": [mu_str(r.gen.word) for r in rows if not r.even],
        "cocycle_failures": sum(not r.cocycle for r in rows),
        "size0_all_trivial": all(r.gen.word.is_identity() for r in zero_stratum),
        "pass": len(rows) == 384
        and not mismatches
        and all(r.even and r.cocycle for r in rows)
        and all(r.gen.word.is_identity() for r in zero_stratum),
    }


def table_csv(rows: list[TableRow] | None = None) -> str:
    rows = table() if rows is None else rows
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.as_csv())
    return buf.getvalue()


def listed_ia_forms() -> list[FreeWord]:
    """The 1 + 2 + 16 words of the IA-generator list, in listed order."""
    m12, m21, m13, m23, m31, m32 = (_g(k) for k in range(1, 7))
    forms = [comm(~m13, ~m12)]
    forms += [conj(comm(~m23, ~m21), ~a) for a in (FreeWord.identity(6), m12)]
    for bits in product((0, 1), repeat=4):
        b = _prod(g for g, e in zip((m12, m21, m13, m23), bits) if e)
        forms.append(conj(comm(~m32, ~m31), ~b))
    return forms


def ia_filter(rows: list[TableRow] | None = None) -> dict:
    """Split the generators into trivial / IA-nontrivial / non-IA and compare
    the IA-nontrivial ones with the listed forms as sets of automorphisms."""
    rows = table() if rows is None else rows
    trivial = [r for r in rows if r.is_trivial]
    ia = [r for r in rows if r.is_IA and not r.is_trivial]
    non_ia = [r for r in rows if not r.is_IA]
    computed = {r.gen.endo for r in ia}
    listed_words = listed_ia_forms()
    listed = {evaluate(to_autword(w)) for w in listed_words}
    missing = [mu_str(w) for w in listed_words if evaluate(to_autword(w)) not in computed]
    extra = sorted({mu_str(r.gen.word) for r in ia if r.gen.endo not in listed})
    return {
        "trivial_count": len(trivial),
        "ia_nontrivial_count": len(ia),
        "non_ia_count": len(non_ia),
        "ia_distinct": len(computed),
        "listed_forms": len(listed_words),
        "listed_distinct": len(listed),
        "missing_from_computed": missing,
        "extra_in_computed": extra,
        "all_non_ia_witnessed": all(r.violation is not None for r in non_ia),
        "ia_nontrivial": [r.to_json() for r in ia],
        "non_ia": [
            {"eps": str(r.gen.lam), "a": str(r.gen.a_gen), "L_violation": list(r.violation)}
            for r in non_ia
        ],
        "pass": computed == listed and all(r.violation is not None for r in non_ia),
    }


def _S(factors: Iterable[Gen], a: Gen) -> FreeWord:
    bits = [0] * 6
    for g in factors:
        bits[_INDEX[g] - 1] = 1
    return schreier_gen(CosetRep(tuple(bits)), a).word


def fullarton_check() -> dict:
    """``(m23 m13^-1 m31 m32 m12 m21^-1)^2`` as a product of eight generators,
    plus IA-ness of it and of ``[m12, m13]``.

    The eight-factor identity is checked both as words and as automorphisms.
    Read left to right (the convention used throughout this package) the
    square is *not* IA; read right to left, i.e. as the reversed word, it is.
    Both readings are reported.  ``pass`` uses the right-to-left reading for
    the IA test, and the reversed word is also checked to have even exponent
    sums, so it lies in the commutator subgroup as well.
    """
    m12, m21, m13, m23, m31, m32 = MU3
    g = {k: _g(_INDEX[v]) for k, v in zip(("12", "21", "13", "23", "31", "32"), MU3)}
    base = g["23"] * ~g["13"] * g["31"] * g["32"] * g["12"] * ~g["21"]
    target = base * base
    everything = MU3
    factors = [
        ~_S((m13, m23), m13),
        _S((m13, m23, m31, m32), m12),
        ~_S(everything, m21),
        _S(everything, m23),
        ~_S((m12, m21, m31, m32), m13),
        _S((m12, m21, m31, m32), m31),
        _S((m12, m21, m32), m32),
        _S((m12, m21), m12),
    ]
    rhs = _prod(factors)
    e_target = evaluate(to_autword(target))
    e_rhs = evaluate(to_autword(rhs))
    rev = FreeWord(6, target.syms[::-1])
    e_rev = evaluate(to_autword(rev))
    c = comm(g["12"], g["13"])
    e_c = evaluate(to_autword(c))
    out = {
        "mu": mu_str(target),
        "product_of_S": mu_str(rhs),
        "factorization_holds": e_target == e_rhs,
        "words_equal": target == rhs,
        "mu_is_IA_left_to_right": is_IA(e_target),
        "mu_matrix_left_to_right": [[int(v) for v in row] for row in abelianization_matrix(e_target)],
        "mu_is_IA_right_to_left": is_IA(e_rev),
        "mu_right_to_left_even": all(v % 2 == 0 for v in exponent_vector(rev)),
        "mu_nontrivial": not e_rev.is_identity(),
        "commutator": mu_str(c),
        "commutator_is_IA": is_IA(e_c),
    }
    out["pass"] = (
        out["factorization_holds"]
        and out["mu_is_IA_right_to_left"]
        and out["mu_right_to_left_even"]
        and out["mu_nontrivial"]
        and out["commutator_is_IA"]
    )
    return out


def ptg_sampler(count: int = 1000, max_len: int = 8, seed: int = 0) -> dict:
    """Random mu-words over the six generators with ``1..max_len`` letters.

    Checks that every word acting trivially on Z^3 has all six exponent sums
    even.  Letters are drawn independently, so short commutator-like words
    occur often enough for the implication to be exercised.
    """
    if count < 0 or max_len < 1:
        raise ValueError("count must be >= 0 and max_len >= 1")
    rng = random.Random(seed)
    ia = ia_nontrivial = 0
    counterexamples = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        syms = [rng.choice((1, -1)) * rng.randint(1, 6) for _ in range(length)]
        w = FreeWord(6, syms)
        e = evaluate(to_autword(w))
        if not is_IA(e):
            continue
        ia += 1
        ia_nontrivial += not e.is_identity()
        if any(v % 2 for v in exponent_vector(w)):
            counterexamples.append(mu_str(w))
    return {
        "count": count,
        "max_len": max_len,
        "seed": seed,
        "ia_count": ia,
        "ia_nontrivial_count": ia_nontrivial,
        "counterexamples": counterexamples,
        "pass": not counterexamples,
    }


def _mat_mul(A, B):
    return tuple(
        tuple(sum(A[i][k] * B[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )


def ptg_exhaustive(max_len: int = 5) -> dict:
    """Every reduced mu-word up to ``max_len`` letters: IA implies all exponent
    sums even.  IA is tested by the generator-matrix product, shared along
    prefixes."""
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    step = {}
    for k, g in enumerate(MU3, start=1):
        for e in (1, -1):
            M = [list(r) for r in ident]
            M[g.i - 1][g.j - 1] = 2 * e
            step[k * e] = tuple(map(tuple, M))
    words = ia = 0
    counterexamples: list[str] = []
    stack = [((), ident, (0,) * 6)]
    while stack:
        syms, M, parity = stack.pop()
        if syms:
            words += 1
            if M == ident:
                ia += 1
                if any(parity):
                    counterexamples.append(mu_str(FreeWord(6, syms)))
        if len(syms) == max_len:
            continue
        for s in step:
            if syms and syms[-1] == -s:
                continue
            p = list(parity)
            p[abs(s) - 1] ^= 1
            stack.append((syms + (s,), _mat_mul(M, step[s]), tuple(p)))
    return {
        "max_len": max_len,
        "words": words,
        "ia_count": ia,
        "counterexamples": counterexamples,
        "pass": not counterexamples,
    }


def mu3(i: int, j: int) -> FreeWord:
    return _g(_INDEX[mu(i, j)])
