"""Generators of the palindromic automorphism group, Collins' relations,
the conjugation action of the extended symmetric group, the center scan
and the ``(f, lambda)`` normal form in rank 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .endo import (
    AutWord,
    Endomorphism,
    Gen,
    alpha,
    autword_to_free,
    compose,
    evaluate,
    generator_endomorphism,
    mu,
    mu_order,
    t,
)
from .words import FreeWord, multiply

__all__ = [
    "SignedPermutation",
    "ES2",
    "es2_element",
    "PiA2Element",
    "RelationCheck",
    "ResourceLimitError",
    "generator",
    "generators",
    "verify_relations",
    "verify_action",
    "center_scan",
    "pia2_normal_form",
    "es2_act",
    "mu_action",
]


class ResourceLimitError(RuntimeError):
    """The requested exhaustive search exceeds the configured cap."""


@dataclass(frozen=True)
class SignedPermutation:
    """``x_i -> x_{perm[i-1]}^{signs[i-1]}``; ``perm`` is 1-based."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)) or len(self.signs) != n:
            raise ValueError(f"not a signed permutation: {self.perm}, {self.signs}")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")

    @property
    def rank(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "SignedPermutation":
        return cls(tuple(range(1, n + 1)), (1,) * n)

    @classmethod
    def from_gen(cls, n: int, g: Gen) -> "SignedPermutation":
        perm = list(range(1, n + 1))
        signs = [1] * n
        if g.kind == "t":
            signs[g.i - 1] = -1
        elif g.kind == "alpha":
            perm[g.i - 1], perm[g.j - 1] = g.j, g.i
        else:
            raise ValueError(f"{g} is not in the extended symmetric group")
        return cls(tuple(perm), tuple(signs))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        # left to right: apply self, then other
        perm = tuple(other.perm[p - 1] for p in self.perm)
        signs = tuple(s * other.signs[p - 1] for p, s in zip(self.perm, self.signs))
        return SignedPermutation(perm, signs)

    def inverse(self) -> "SignedPermutation":
        n = self.rank
        perm = [0] * n
        signs = [0] * n
        for i, (p, s) in enumerate(zip(self.perm, self.signs), start=1):
            perm[p - 1] = i
            signs[p - 1] = s
        return SignedPermutation(tuple(perm), tuple(signs))

    def __pow__(self, k: int) -> "SignedPermutation":
        base = self if k >= 0 else self.inverse()
        out = SignedPermutation.identity(self.rank)
        for _ in range(abs(k)):
            out = out * base
        return out

    def order(self) -> int:
        k, p = 1, self
        ident = SignedPermutation.identity(self.rank)
        while p != ident:
            p, k = p * self, k + 1
        return k

    def to_endomorphism(self) -> Endomorphism:
        n = self.rank
        return Endomorphism(
            n, [FreeWord(n, [p * s]) for p, s in zip(self.perm, self.signs)]
        )

    def to_autword(self) -> AutWord:
        """A word in ``t_i`` and ``alpha_{i,i+1}`` evaluating to this element.

        Signs first, then the permutation as a product of adjacent swaps.
        """
        n = self.rank
        letters = [(t(i), 1) for i, s in enumerate(self.signs, start=1) if s < 0]
        # sort the inverse permutation by adjacent swaps; each swap of
        # positions k, k+1 there is right multiplication by alpha_k here
        inv = [0] * n
        for i, p in enumerate(self.perm):
            inv[p - 1] = i
        swaps = []
        changed = True
        while changed:
            changed = False
            for k in range(n - 1):
                if inv[k] > inv[k + 1]:
                    inv[k], inv[k + 1] = inv[k + 1], inv[k]
                    swaps.append(k + 1)
                    changed = True
        letters.extend((alpha(k), 1) for k in reversed(swaps))
        return AutWord(n, letters)

    @property
    def name(self) -> str:
        if self.rank == 2:
            return _ES2_NAMES[self]
        return str(self.to_autword())

    def __str__(self) -> str:
        return self.name


def _es2_table() -> dict[str, SignedPermutation]:
    s = SignedPermutation.from_gen(2, t(1))
    d = SignedPermutation.from_gen(2, t(2))
    r = SignedPermutation.from_gen(2, alpha(1))
    e = SignedPermutation.identity(2)
    return {
        "id": e,
        "s": s,
        "d": d,
        "sd": s * d,
        "r": r,
        "sr": s * r,
        "dr": d * r,
        "sdr": s * d * r,
    }


#: The eight elements of ES_2 keyed by short names: ``s`` is sigma = t1,
#: ``d`` is delta = t2, ``r`` is rho = alpha_12; ``sr`` means sigma then rho.
ES2: dict[str, SignedPermutation] = _es2_table()
_ES2_NAMES = {v: k for k, v in ES2.items()}
_ES2_ALIASES = {"sigma": "s", "delta": "d", "rho": "r", "σ": "s", "δ": "d", "ρ": "r"}


def es2_element(name: str) -> SignedPermutation:
    """Look up an ES_2 element: ``"sdr"``, ``"sigma delta"``, ``"σρ"``, ``"id"``."""
    key = name.strip()
    if key in ES2:
        return ES2[key]
    for alias, short in _ES2_ALIASES.items():
        key = key.replace(alias, short)
    key = key.replace(" ", "").replace("*", "")
    if key in ("", "1", "id"):
        return ES2["id"]
    out = ES2["id"]
    for ch in key:
        if ch not in "sdr":
            raise ValueError(f"unknown ES2 element {name!r}")
        out = out * ES2[ch]
    return out


def generators(n: int) -> list[Gen]:
    """Generating symbols of the rank-n group: all mu_ij, then t_i, then alpha_i."""
    return mu_order(n) + [t(i) for i in range(1, n + 1)] + [alpha(i) for i in range(1, n)]


def generator(n: int, symbol: Gen | str) -> Endomorphism:
    if isinstance(symbol, str):
        w = AutWord.parse(symbol, n)
        if len(w.letters) != 1 or w.letters[0][1] != 1:
            raise ValueError(f"{symbol!r} is not a single generator")
        symbol = w.letters[0][0]
    if symbol.max_index() > n:
        raise ValueError(f"{symbol} is not a generator of rank {n}")
    return generator_endomorphism(n, symbol)


@dataclass
class RelationCheck:
    relation: str
    lhs_word: AutWord
    rhs_word: AutWord
    passed: bool

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "lhs_word": str(self.lhs_word),
            "rhs_word": str(self.rhs_word),
            "pass": self.passed,
        }


def _check(name: str, lhs: AutWord, rhs: AutWord) -> RelationCheck:
    return RelationCheck(name, lhs, rhs, evaluate(lhs) == evaluate(rhs))


def collins_relations(n: int) -> list[tuple[str, AutWord, AutWord]]:
    """Every instance of the three defining relation families of E Pi A_n.

    Returned as ``(kind, lhs, rhs)`` with kind in ``disjoint``, ``common-target``
    and ``long``.
    """
    w = lambda *gs: AutWord(n, gs)  # noqa: E731
    out = []
    pairs = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j]
    for (i, j), (k, l) in itertools.combinations(pairs, 2):
        if len({i, j, k, l}) == 4:
            out.append(("disjoint", w((mu(i, j), 1), (mu(k, l), 1)), w((mu(k, l), 1), (mu(i, j), 1))))
    for k in range(1, n + 1):
        for i, j in itertools.combinations([x for x in range(1, n + 1) if x != k], 2):
            out.append(("common-target", w((mu(i, k), 1), (mu(j, k), 1)), w((mu(j, k), 1), (mu(i, k), 1))))
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        out.append((
            "long",
            w((mu(i, k), 1), (mu(j, k), 1), (mu(i, j), 1)),
            w((mu(i, j), 1), (mu(j, k), 1), (mu(i, k), -1)),
        ))
    return out


def verify_relations(n: int) -> list[RelationCheck]:
    """Check every defining relation instance as an equality of automorphisms.

    Rank 2 has no instances (the elementary subgroup is free of rank 2).
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    return [_check(f"{lhs} = {rhs}", lhs, rhs) for _, lhs, rhs in collins_relations(n)]


def verify_action(n: int) -> list[RelationCheck]:
    """Check the conjugation rules of t_k and alpha_{i,i+1} on every mu_ij."""
    if n < 2:
        raise ValueError("rank must be at least 2")
    out = []
    for m in mu_order(n):
        M = AutWord.of(n, m)
        for k in range(1, n + 1):
            T = AutWord.of(n, t(k))
            rhs = M.inverse() if k in (m.i, m.j) else M
            out.append(_check(f"t{k} {m} t{k} = {rhs}", T * M * T, rhs))
        for a in range(1, n):
            A = AutWord.of(n, alpha(a))
            swap = {a: a + 1, a + 1: a}
            rhs = AutWord.of(n, mu(swap.get(m.i, m.i), swap.get(m.j, m.j)))
            out.append(_check(f"a{a}{a + 1} {m} a{a}{a + 1} = {rhs}", A * M * A, rhs))
    return out


def _scan_alphabet(n: int) -> list[tuple[Gen, int]]:
    letters: list[tuple[Gen, int]] = []
    for m in mu_order(n):
        letters += [(m, 1), (m, -1)]
    letters += [(t(i), 1) for i in range(1, n + 1)]
    letters += [(alpha(i), 1) for i in range(1, n)]
    return letters


def _count_words(alphabet_size: int, max_len: int) -> int:
    # reduced sequences: no letter followed by its own inverse
    total, layer = 1, alphabet_size
    for _ in range(max_len):
        total += layer
        layer *= alphabet_size - 1
    return total


def center_scan(n: int, max_len: int, cap: int = 2_000_000) -> list[AutWord]:
    """Words of length <= ``max_len`` whose automorphism commutes with every generator.

    Words are enumerated in shortlex order over mu12 < mu12^-1 < mu21 < ...
    < t1 < ... < alpha12 < ...; the result keeps the first word for each
    distinct automorphism.  Centrality is only established up to the bound.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    alphabet = _scan_alphabet(n)
    if _count_words(len(alphabet), max_len) > cap:
        raise ResourceLimitError(
            f"search over {len(alphabet)} letters up to length {max_len} exceeds cap {cap}"
        )
    gens = [generator_endomorphism(n, g) for g in generators(n)]
    step = {(g, e): generator_endomorphism(n, g, e) for g, e in alphabet}
    seen: set[Endomorphism] = set()
    central: list[AutWord] = []

    def inverse_letter(letter):
        g, e = letter
        return letter if g.involutive else (g, -e)

    # breadth-first by length gives shortlex order over the fixed alphabet
    layer: list[tuple[tuple, Endomorphism]] = [((), Endomorphism.identity(n))]
    for length in range(max_len + 1):
        next_layer = []
        for word, e in layer:
            if e not in seen:
                seen.add(e)
                if all(compose(e, g) == compose(g, e) for g in gens):
                    central.append(AutWord(n, word))
            if length == max_len:
                continue
            for letter in alphabet:
                if word and word[-1] == inverse_letter(letter):
                    continue
                next_layer.append((word + (letter,), compose(e, step[letter])))
        layer = next_layer
    return central


# -- rank two: Pi A_2 = E Pi A_2 x| ES_2 -------------------------------------

#: index 1 of a rank-2 free word f stands for mu12, index 2 for mu21
MU2 = (mu(1, 2), mu(2, 1))


def mu_action(g: Gen, e: int, lam: SignedPermutation) -> tuple[Gen, int]:
    """``(g^e)^lam = lam^-1 g^e lam`` for ``g = mu_ij``: ``mu_{pi(i) pi(j)}^{e s_i s_j}``."""
    i, j = g.i, g.j
    return mu(lam.perm[i - 1], lam.perm[j - 1]), e * lam.signs[i - 1] * lam.signs[j - 1]


def es2_act(f: FreeWord, lam: SignedPermutation) -> FreeWord:
    """``f^lam`` for ``f`` a word in (mu12, mu21) encoded as a rank-2 free word."""
    syms = []
    for s in f.syms:
        g, e = mu_action(MU2[abs(s) - 1], 1 if s > 0 else -1, lam)
        k = MU2.index(g) + 1
        syms.append(k if e > 0 else -k)
    return FreeWord(2, syms)


@dataclass(frozen=True)
class PiA2Element:
    """``f * lam`` with ``f`` in the free group on (mu12, mu21) and ``lam`` in ES_2."""

    f: FreeWord
    lam: SignedPermutation

    def __post_init__(self):
        if self.f.rank != 2 or self.lam.rank != 2:
            raise ValueError("PiA2Element lives in rank 2")

    @classmethod
    def identity(cls) -> "PiA2Element":
        return cls(FreeWord.identity(2), ES2["id"])

    @classmethod
    def make(cls, f: str | FreeWord = "", lam: str | SignedPermutation = "id") -> "PiA2Element":
        """Build from text, e.g. ``make("m12 m21^-1", "r")``."""
        if isinstance(f, str):
            f = autword_to_free(AutWord.parse(f, 2), MU2)
        if isinstance(lam, str):
            lam = es2_element(lam)
        return cls(f, lam)

    def f_word(self) -> AutWord:
        return AutWord(2, [(MU2[i - 1], e) for i, e in self.f.syllables()])

    def to_autword(self) -> AutWord:
        return self.f_word() * self.lam.to_autword()

    def evaluate(self) -> Endomorphism:
        return compose(evaluate(self.f_word()), self.lam.to_endomorphism())

    def __mul__(self, other: "PiA2Element") -> "PiA2Element":
        f = multiply(self.f, es2_act(other.f, self.lam.inverse()))
        return PiA2Element(f, self.lam * other.lam)

    def inverse(self) -> "PiA2Element":
        return PiA2Element(es2_act(self.f.inverse(), self.lam), self.lam.inverse())

    def __pow__(self, k: int) -> "PiA2Element":
        base = self if k >= 0 else self.inverse()
        out = PiA2Element.identity()
        for _ in range(abs(k)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return self.f.is_identity() and self.lam == ES2["id"]

    def __str__(self) -> str:
        f = str(self.f_word())
        lam = self.lam.name
        if lam == "id":
            return f
        return lam if f == "1" else f"{f} . {lam}"

    def to_json(self) -> dict:
        return {"f": str(self.f_word()), "lambda": self.lam.name}



def pia2_normal_form(w: AutWord) -> PiA2Element:
    """Rewrite a rank-2 word as ``f * lam`` by pushing ES_2 letters to the right.

    A mu letter ``m`` met after ``lam`` becomes ``m^(lam^-1)`` in ``f``.
    """
    if w.rank != 2:
        raise ValueError("normal form is defined in rank 2 only")
    f_syms: list[int] = []
    lam = ES2["id"]
    for g, e in w.letters:
        if g.kind == "mu":
            h, sign = mu_action(g, 1 if e > 0 else -1, lam.inverse())
            k = MU2.index(h) + 1
            f_syms.extend([k if sign > 0 else -k] * abs(e))
        elif e % 2:
            lam = lam * SignedPermutation.from_gen(2, g)
    return PiA2Element(FreeWord(2, f_syms), lam)


def random_autword(rng, n: int, length: int, symbols: Sequence[Gen] | None = None) -> AutWord:
    """``length`` random letters over ``symbols`` (default: all generators)."""
    symbols = list(symbols) if symbols is not None else generators(n)
    letters = []
    for _ in range(length):
        g = symbols[rng.randrange(len(symbols))]
        e = 1 if g.involutive else rng.choice((1, -1))
        letters.append((g, e))
    return AutWord(n, letters)


def iter_es2() -> Iterator[SignedPermutation]:
    return iter(ES2.values())
