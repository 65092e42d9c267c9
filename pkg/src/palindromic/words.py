"""Freely reduced words in the free group F_n.

A word is stored as a tuple of nonzero signed generator indices: ``+i``
stands for ``x_i`` and ``-i`` for ``x_i^-1``.  Construction always freely
reduces, so two words are equal exactly when their letter tuples are.

>>> u = parse_word("x3^2 x1^-2 x3^5 x1^2", 3)
>>> len(u), exponent_sum(u, 3)
(11, 7)
>>> str(reverse(u))
'x1^2 x3^5 x1^-2 x3^2'
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Sequence

__all__ = [
    "FreeWord",
    "ParseError",
    "MalformedInputError",
    "RankMismatchError",
    "free_reduce",
    "parse_word",
    "format_word",
    "multiply",
    "invert",
    "reverse",
    "is_palindrome",
    "exponent_sum",
    "exponent_vector",
    "words_of_length",
]


class ParseError(ValueError):
    """Raised when a word string does not match the token grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class MalformedInputError(ValueError):
    """Raised for a syntactically valid word with an out-of-range index."""


class RankMismatchError(ValueError):
    pass


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    """Left-to-right stack reduction of a signed-index letter sequence."""
    out: list[int] = []
    for s in letters:
        if out and out[-1] == -s:
            out.pop()
        else:
            out.append(s)
    return tuple(out)


class FreeWord:
    """An element of the free group of the given rank, always freely reduced.

    ``letters`` may be signed integers (``2`` / ``-2``) or ``(index, sign)``
    pairs.  Words are immutable and hashable.
    """

    __slots__ = ("rank", "_syms", "_hash")

    def __init__(self, rank: int, letters: Iterable = ()):
        if rank < 1:
            raise ValueError("rank must be positive")
        syms = []
        for a in letters:
            if isinstance(a, tuple):
                index, sign = a
                if sign not in (1, -1):
                    raise MalformedInputError(f"bad sign {sign!r}")
                a = index * sign
            if a == 0 or abs(a) > rank:
                raise MalformedInputError(f"generator index {abs(a)} outside 1..{rank}")
            syms.append(a)
        self.rank = rank
        self._syms = free_reduce(syms)
        self._hash = hash((rank, self._syms))

    @classmethod
    def _raw(cls, rank: int, syms: tuple[int, ...]) -> "FreeWord":
        # trusted constructor: syms already reduced and in range
        w = object.__new__(cls)
        w.rank = rank
        w._syms = syms
        w._hash = hash((rank, syms))
        return w

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls._raw(rank, ())

    @classmethod
    def generator(cls, rank: int, i: int, power: int = 1) -> "FreeWord":
        return cls(rank, [i if power > 0 else -i] * abs(power))

    @property
    def syms(self) -> tuple[int, ...]:
        """Letters as signed indices."""
        return self._syms

    @property
    def letters(self) -> tuple[tuple[int, int], ...]:
        """Letters as ``(index, sign)`` pairs."""
        return tuple((abs(s), 1 if s > 0 else -1) for s in self._syms)

    def syllables(self) -> list[tuple[int, int]]:
        """Maximal runs of one generator, as ``(index, exponent)`` pairs."""
        out: list[list[int]] = []
        for s in self._syms:
            i, e = abs(s), (1 if s > 0 else -1)
            if out and out[-1][0] == i:
                out[-1][1] += e
            else:
                out.append([i, e])
        return [(i, e) for i, e in out]

    def is_identity(self) -> bool:
        return not self._syms

    def __len__(self) -> int:
        return len(self._syms)

    def __iter__(self) -> Iterator[int]:
        return iter(self._syms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.rank == other.rank and self._syms == other._syms

    def __hash__(self) -> int:
        return self._hash

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return multiply(self, other)

    def __invert__(self) -> "FreeWord":
        return invert(self)

    def inverse(self) -> "FreeWord":
        return invert(self)

    def __pow__(self, k: int) -> "FreeWord":
        base = self if k >= 0 else invert(self)
        result = FreeWord.identity(self.rank)
        for _ in range(abs(k)):
            result = multiply(result, base)
        return result

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"FreeWord({self.rank}, {format_word(self)!r})"


_TOKEN = re.compile(r"x(\d+)(?:\^([+-]?\d+))?")


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse ``"x1 x2^-1 x1"``-style text.  ``"1"`` or ``""`` is the identity."""
    stripped = text.strip()
    if stripped in ("", "1"):
        return FreeWord.identity(rank)
    syms: list[int] = []
    for m in re.finditer(r"\S+", text):
        tok = _TOKEN.fullmatch(m.group())
        if tok is None:
            raise ParseError(f"bad token {m.group()!r}", m.start())
        index = int(tok.group(1))
        power = int(tok.group(2)) if tok.group(2) is not None else 1
        if power == 0:
            raise ParseError(f"zero exponent in {m.group()!r}", m.start())
        if index == 0 or index > rank:
            raise MalformedInputError(
                f"generator index {index} outside 1..{rank} at position {m.start()}"
            )
        syms.extend([index if power > 0 else -index] * abs(power))
    return FreeWord._raw(rank, free_reduce(syms))


def format_word(w: FreeWord, prefix: str = "x") -> str:
    if w.is_identity():
        return "1"
    parts = []
    for i, e in w.syllables():
        parts.append(f"{prefix}{i}" if e == 1 else f"{prefix}{i}^{e}")
    return " ".join(parts)


def _check_rank(u: FreeWord, v: FreeWord) -> None:
    if u.rank != v.rank:
        raise RankMismatchError(f"rank {u.rank} vs rank {v.rank}")


def multiply(u: FreeWord, v: FreeWord) -> FreeWord:
    _check_rank(u, v)
    a, b = u._syms, v._syms
    k = 0
    n = min(len(a), len(b))
    while k < n and a[-1 - k] == -b[k]:
        k += 1
    return FreeWord._raw(u.rank, a[: len(a) - k] + b[k:])


def invert(u: FreeWord) -> FreeWord:
    return FreeWord._raw(u.rank, tuple(-s for s in reversed(u._syms)))


def reverse(u: FreeWord) -> FreeWord:
    """The reverse word: same letters, same signs, opposite order."""
    return FreeWord._raw(u.rank, u._syms[::-1])


def is_palindrome(u: FreeWord) -> bool:
    return u._syms == u._syms[::-1]


def exponent_sum(u: FreeWord, j: int) -> int:
    """Signed number of occurrences of ``x_j`` in ``u``."""
    if not 1 <= j <= u.rank:
        raise IndexError(f"generator index {j} outside 1..{u.rank}")
    return sum(1 if s == j else -1 for s in u._syms if abs(s) == j)


def exponent_vector(u: FreeWord) -> list[int]:
    v = [0] * u.rank
    for s in u._syms:
        v[abs(s) - 1] += 1 if s > 0 else -1
    return v


def words_of_length(rank: int, length: int) -> Iterator[FreeWord]:
    """All reduced words of exactly ``length`` letters, in shortlex order."""
    alphabet: Sequence[int] = [s for i in range(1, rank + 1) for s in (i, -i)]

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == length:
            yield prefix
            return
        for s in alphabet:
            if prefix and prefix[-1] == -s:
                continue
            yield from extend(prefix + (s,))

    for syms in extend(()):
        yield FreeWord._raw(rank, syms)
