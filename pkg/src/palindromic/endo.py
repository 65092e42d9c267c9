"""Endomorphisms of F_n given by basis images, and formal words in the
palindromic generators.

Everything composes left to right: ``e1 * e2`` applies ``e1`` first, so
``(x)(e1 e2) = ((x)e1)e2``.  Conjugation is ``g^h = h^-1 g h`` and the
commutator is ``[g, h] = g^-1 h^-1 g h``.

Abelianization matrices carry the exponent vector of ``(x_i)e`` in row
``i``; with the left-to-right convention this makes
``abelianization_matrix(e1 * e2) == M(e1) @ M(e2)``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .words import (
    FreeWord,
    ParseError,
    RankMismatchError,
    exponent_vector,
    format_word,
    is_palindrome,
    parse_word,
)

__all__ = [
    "Gen",
    "mu",
    "t",
    "alpha",
    "AutWord",
    "Endomorphism",
    "apply",
    "compose",
    "evaluate",
    "equals",
    "abelianization_matrix",
    "is_IA",
    "palindromic_shape",
    "int_matrix",
    "mu_order",
]


@dataclass(frozen=True, order=True)
class Gen:
    """A generator symbol: ``mu`` (i, j), ``t`` (i) or ``alpha`` (i, i+1)."""

    kind: str
    i: int
    j: int = 0

    def __post_init__(self):
        if self.kind == "mu":
            if self.i == self.j or self.i < 1 or self.j < 1:
                raise ValueError(f"invalid mu indices ({self.i}, {self.j})")
        elif self.kind == "t":
            if self.i < 1:
                raise ValueError(f"invalid t index {self.i}")
        elif self.kind == "alpha":
            if self.i < 1 or self.j != self.i + 1:
                raise ValueError(f"alpha must swap adjacent indices, got ({self.i}, {self.j})")
        else:
            raise ValueError(f"unknown generator kind {self.kind!r}")

    @property
    def involutive(self) -> bool:
        return self.kind != "mu"

    def max_index(self) -> int:
        return max(self.i, self.j)

    def __str__(self) -> str:
        if self.kind == "mu":
            return f"m{self.i}{self.j}"
        if self.kind == "t":
            return f"t{self.i}"
        return f"a{self.i}{self.j}"


def mu(i: int, j: int) -> Gen:
    return Gen("mu", i, j)


def t(i: int) -> Gen:
    return Gen("t", i)


def alpha(i: int) -> Gen:
    """The swap of ``x_i`` and ``x_{i+1}``."""
    return Gen("alpha", i, i + 1)


def mu_order(n: int) -> list[Gen]:
    """All ``mu_ij`` of rank ``n`` in the order m12 < m21 < m13 < m23 < m31 < m32 < ...

    Block ``k`` lists ``mu_ik`` for ``i < k`` and then ``mu_ki`` for ``i < k``.
    """
    out = []
    for k in range(2, n + 1):
        out.extend(mu(i, k) for i in range(1, k))
        out.extend(mu(k, i) for i in range(1, k))
    return out


_GEN_TOKEN = re.compile(r"(m|t|a)(\d)(\d)?(?:\^([+-]?\d+))?")


class AutWord:
    """A formal product of generator powers, e.g. ``m12 m21^-1 t1``.

    Adjacent powers of the same symbol are merged and zero powers dropped.
    Involutive symbols keep their exponent as written; only evaluation
    reduces it.
    """

    __slots__ = ("rank", "letters", "_hash")

    def __init__(self, rank: int, letters: Iterable[tuple[Gen, int]] = ()):
        merged: list[list] = []
        for g, e in letters:
            if g.max_index() > rank:
                raise ValueError(f"{g} is not a generator of rank {rank}")
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError("exponents must be integers")
            if e == 0:
                continue
            if merged and merged[-1][0] == g:
                merged[-1][1] += e
                if merged[-1][1] == 0:
                    merged.pop()
            else:
                merged.append([g, e])
        self.rank = rank
        self.letters: tuple[tuple[Gen, int], ...] = tuple((g, e) for g, e in merged)
        self._hash = hash((rank, self.letters))

    @classmethod
    def identity(cls, rank: int) -> "AutWord":
        return cls(rank)

    @classmethod
    def of(cls, rank: int, g: Gen, e: int = 1) -> "AutWord":
        return cls(rank, [(g, e)])

    @classmethod
    def parse(cls, text: str, rank: int) -> "AutWord":
        """Parse whitespace separated tokens ``m12``, ``m12^-3``, ``t1``, ``a12``."""
        if text.strip() in ("", "1"):
            return cls(rank)
        letters = []
        for m in re.finditer(r"\S+", text):
            tok = _GEN_TOKEN.fullmatch(m.group())
            if tok is None:
                raise ParseError(f"bad automorphism token {m.group()!r}", m.start())
            kind, a, b, p = tok.groups()
            power = int(p) if p is not None else 1
            if power == 0:
                raise ParseError(f"zero exponent in {m.group()!r}", m.start())
            try:
                if kind == "m":
                    if b is None:
                        raise ValueError("mu needs two indices")
                    g = mu(int(a), int(b))
                elif kind == "t":
                    if b is not None:
                        raise ValueError("t takes one index")
                    g = t(int(a))
                else:
                    if b is None:
                        raise ValueError("alpha needs two indices")
                    g = Gen("alpha", int(a), int(b))
            except ValueError as exc:
                raise ParseError(f"{exc} in {m.group()!r}", m.start()) from None
            if g.max_index() > rank:
                raise ParseError(f"{g} is not a generator of rank {rank}", m.start())
            letters.append((g, power))
        return cls(rank, letters)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AutWord):
            return NotImplemented
        return self.rank == other.rank and self.letters == other.letters

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "AutWord") -> "AutWord":
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs rank {other.rank}")
        return AutWord(self.rank, self.letters + other.letters)

    def inverse(self) -> "AutWord":
        return AutWord(self.rank, [(g, -e) for g, e in reversed(self.letters)])

    __invert__ = inverse

    def __pow__(self, k: int) -> "AutWord":
        base = self if k >= 0 else self.inverse()
        return AutWord(self.rank, base.letters * abs(k))

    def conj(self, h: "AutWord") -> "AutWord":
        """``self^h = h^-1 self h``."""
        return h.inverse() * self * h

    def comm(self, h: "AutWord") -> "AutWord":
        """``[self, h] = self^-1 h^-1 self h``."""
        return self.inverse() * h.inverse() * self * h

    def exponent_sums(self) -> dict[Gen, int]:
        out: dict[Gen, int] = {}
        for g, e in self.letters:
            out[g] = out.get(g, 0) + e
        return out

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(str(g) if e == 1 else f"{g}^{e}" for g, e in self.letters)

    def __repr__(self) -> str:
        return f"AutWord({self.rank}, {str(self)!r})"


class Endomorphism:
    """An endomorphism of F_rank, determined by the images of ``x_1..x_rank``."""

    __slots__ = ("rank", "images", "_inv_images", "_hash")

    def __init__(self, rank: int, images: Sequence[FreeWord]):
        images = tuple(images)
        if len(images) != rank:
            raise ValueError(f"expected {rank} images, got {len(images)}")
        for w in images:
            if w.rank != rank:
                raise RankMismatchError(f"image of rank {w.rank} in rank-{rank} endomorphism")
        self.rank = rank
        self.images = images
        self._inv_images: tuple[tuple[int, ...], ...] | None = None
        self._hash = hash(images)

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(rank, [FreeWord(rank, [i]) for i in range(1, rank + 1)])

    @classmethod
    def from_strings(cls, rank: int, images: Sequence[str]) -> "Endomorphism":
        return cls(rank, [parse_word(s, rank) for s in images])

    def to_json(self) -> dict:
        return {"rank": self.rank, "images": [format_word(w) for w in self.images]}

    @classmethod
    def from_json(cls, data) -> "Endomorphism":
        if isinstance(data, str):
            data = json.loads(data)
        return cls.from_strings(int(data["rank"]), data["images"])

    def is_identity(self) -> bool:
        return all(w.syms == (i,) for i, w in enumerate(self.images, start=1))

    def __call__(self, u: FreeWord) -> FreeWord:
        return apply(self, u)

    def __mul__(self, other: "Endomorphism") -> "Endomorphism":
        return compose(self, other)

    def __pow__(self, k: int) -> "Endomorphism":
        if k < 0:
            raise ValueError("general endomorphism inversion is not provided")
        result = Endomorphism.identity(self.rank)
        for _ in range(k):
            result = compose(result, self)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.rank == other.rank and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"x{i}->{format_word(w)}" for i, w in enumerate(self.images, 1))
        return f"Endomorphism({body})"


def apply(e: Endomorphism, u: FreeWord) -> FreeWord:
    """Substitute the images of ``e`` into ``u`` and freely reduce."""
    if e.rank != u.rank:
        raise RankMismatchError(f"rank {e.rank} endomorphism applied to rank {u.rank} word")
    if e._inv_images is None:
        e._inv_images = tuple(tuple(-s for s in reversed(w.syms)) for w in e.images)
    out: list[int] = []
    for s in u.syms:
        piece = e.images[s - 1].syms if s > 0 else e._inv_images[-s - 1]
        for a in piece:
            if out and out[-1] == -a:
                out.pop()
            else:
                out.append(a)
    return FreeWord._raw(u.rank, tuple(out))


def compose(e1: Endomorphism, e2: Endomorphism) -> Endomorphism:
    """The product ``e1 e2``: apply ``e1``, then ``e2``."""
    if e1.rank != e2.rank:
        raise RankMismatchError(f"rank {e1.rank} vs rank {e2.rank}")
    return Endomorphism(e1.rank, [apply(e2, w) for w in e1.images])


def equals(e1: Endomorphism, e2: Endomorphism) -> bool:
    if e1.rank != e2.rank:
        raise RankMismatchError(f"rank {e1.rank} vs rank {e2.rank}")
    return e1.images == e2.images


@lru_cache(maxsize=None)
def generator_endomorphism(rank: int, g: Gen, sign: int = 1) -> Endomorphism:
    """The automorphism ``g`` (``sign=1``) or its inverse (``sign=-1``)."""
    if g.max_index() > rank:
        raise ValueError(f"{g} is not a generator of rank {rank}")
    images = [FreeWord(rank, [k]) for k in range(1, rank + 1)]
    if g.kind == "mu":
        x = g.j if sign > 0 else -g.j
        images[g.i - 1] = FreeWord(rank, [x, g.i, x])
    elif g.kind == "t":
        images[g.i - 1] = FreeWord(rank, [-g.i])
    else:
        images[g.i - 1], images[g.j - 1] = images[g.j - 1], images[g.i - 1]
    return Endomorphism(rank, images)


def evaluate(w: AutWord) -> Endomorphism:
    """Left-to-right product of the generator automorphisms spelled by ``w``."""
    result = Endomorphism.identity(w.rank)
    for g, e in w.letters:
        k = abs(e)
        if g.involutive:
            k %= 2
        step = generator_endomorphism(w.rank, g, 1 if e > 0 else -1)
        for _ in range(k):
            result = compose(result, step)
    return result


def int_matrix(rows) -> np.ndarray:
    """An exact integer matrix (numpy array of Python ints)."""
    a = np.empty((len(rows), len(rows[0]) if len(rows) else 0), dtype=object)
    for r, row in enumerate(rows):
        for c, v in enumerate(row):
            a[r, c] = int(v)
    return a


def identity_matrix(n: int) -> np.ndarray:
    return int_matrix([[int(r == c) for c in range(n)] for r in range(n)])


def abelianization_matrix(e: Endomorphism) -> np.ndarray:
    """Row ``i`` is the exponent vector of the image of ``x_i``.

    Entry ``(i, j)`` is the exponent sum of ``x_j`` in ``(x_i)e``.
    """
    return int_matrix([exponent_vector(w) for w in e.images])


def is_IA(e: Endomorphism) -> bool:
    """True when ``e`` induces the identity on the abelianization."""
    for i, w in enumerate(e.images):
        v = exponent_vector(w)
        if any(v[j] != (1 if j == i else 0) for j in range(e.rank)):
            return False
    return True


def palindromic_shape(e: Endomorphism) -> tuple[bool, bool]:
    """``(all_palindromic, elementary)`` for the images of ``e``.

    ``all_palindromic``: every image is a palindrome.  ``elementary``: image
    ``i`` has the form ``u x_i reverse(u)`` for every ``i``.
    """
    all_pal = all(is_palindrome(w) for w in e.images)
    elementary = True
    for i, w in enumerate(e.images, start=1):
        s = w.syms
        mid = len(s) // 2
        if len(s) % 2 == 0 or s[mid] != i or not is_palindrome(w):
            elementary = False
            break
    return all_pal, elementary


def split_elementary(w: FreeWord, i: int) -> FreeWord | None:
    """Return ``u`` with ``w = u x_i reverse(u)``, or ``None``."""
    s = w.syms
    if len(s) % 2 == 0 or s[len(s) // 2] != i or not is_palindrome(w):
        return None
    return FreeWord._raw(w.rank, s[: len(s) // 2])


def mu_word(letters: Iterable[tuple[int, int, int]], rank: int) -> AutWord:
    """Shorthand: ``[(1, 2, 1), (2, 1, -1)]`` is ``m12 m21^-1``."""
    return AutWord(rank, [(mu(i, j), e) for i, j, e in letters])


def free_to_autword(f: FreeWord, alphabet: Sequence[Gen], rank: int) -> AutWord:
    """Read a free word over an indexed alphabet of generators as an AutWord."""
    return AutWord(rank, [(alphabet[i - 1], e) for i, e in f.syllables()])


def autword_to_free(w: AutWord, alphabet: Sequence[Gen]) -> FreeWord:
    index = {g: k for k, g in enumerate(alphabet, start=1)}
    syms = []
    for g, e in w.letters:
        k = index[g]
        syms.extend([k if e > 0 else -k] * abs(e))
    return FreeWord(len(alphabet), syms)

