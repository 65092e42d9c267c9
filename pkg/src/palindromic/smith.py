"""Smith normal form over the integers and abelianizations of presentations."""

from __future__ import annotations

import re
from typing import Iterable, Sequence

from .endo import AutWord, Gen

__all__ = [
    "smith_normal_form",
    "exponent_matrix",
    "presentation_abelianization",
    "describe_abelian_group",
    "UnknownGeneratorError",
]


class UnknownGeneratorError(ValueError):
    pass


def _rows(M) -> list[list[int]]:
    return [[int(v) for v in row] for row in M]


def smith_normal_form(M) -> list[int]:
    """Invariant factors ``d_1 | d_2 | ... `` of an integer matrix of any shape.

    Returns ``min(rows, cols)`` non-negative integers; zeros (rank deficiency)
    come last.  Exact for arbitrarily large entries.
    """
    A = _rows(M)
    m = len(A)
    n = len(A[0]) if m else 0
    diag: list[int] = []
    for s in range(min(m, n)):
        while True:
            pivot = _min_nonzero(A, s, m, n)
            if pivot is None:
                diag.extend([0] * (min(m, n) - s))
                return _normalise(diag)
            pi, pj = pivot
            A[s], A[pi] = A[pi], A[s]
            for row in A:
                row[s], row[pj] = row[pj], row[s]
            p = A[s][s]
            dirty = False
            for i in range(s + 1, m):
                q = A[i][s] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[s])]
                dirty |= A[i][s] != 0
            for j in range(s + 1, n):
                q = A[s][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[s]
                dirty |= A[s][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(s + 1, m) for j in range(s + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                diag.append(abs(p))
                break
            # fold an offending row into the pivot row and reduce again
            A[s] = [a + b for a, b in zip(A[s], A[bad])]
    return _normalise(diag)


def _min_nonzero(A, s, m, n):
    best = None
    for i in range(s, m):
        for j in range(s, n):
            v = A[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else (best[1], best[2])


def _normalise(diag: list[int]) -> list[int]:
    # divisibility already holds for the nonzero prefix; keep zeros last
    nonzero = [d for d in diag if d]
    return nonzero + [0] * (len(diag) - len(nonzero))


_FORMAL_TOKEN = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)(?:\^([+-]?\d+))?")


def _formal_letters(word, generators: Sequence[str]) -> list[tuple[str, int]]:
    if isinstance(word, AutWord):
        return [(str(g), e) for g, e in word.letters]
    if isinstance(word, str):
        if word.strip() in ("", "1"):
            return []
        out = []
        for tok in word.split():
            m = _FORMAL_TOKEN.fullmatch(tok)
            if m is None:
                raise ValueError(f"bad token {tok!r}")
            out.append((m.group(1), int(m.group(2)) if m.group(2) else 1))
        return out
    return [(str(g), int(e)) for g, e in word]


def exponent_matrix(generators: Sequence[str | Gen], relators: Iterable) -> list[list[int]]:
    """One row per relator: the exponent sum of each generator.

    A relator is an :class:`AutWord`, a string such as ``"m12 m32 m13^-1"``,
    a sequence of ``(symbol, exponent)`` pairs, or an equation ``(lhs, rhs)``
    given as a 2-tuple of any of those, read as ``lhs * rhs^-1``.
    """
    names = [str(g) for g in generators]
    index = {g: k for k, g in enumerate(names)}
    rows = []
    for rel in relators:
        if isinstance(rel, tuple) and len(rel) == 2 and not isinstance(rel[1], int):
            lhs, rhs = rel
            letters = _formal_letters(lhs, names) + [
                (g, -e) for g, e in _formal_letters(rhs, names)
            ]
        else:
            letters = _formal_letters(rel, names)
        row = [0] * len(names)
        for g, e in letters:
            if g not in index:
                raise UnknownGeneratorError(f"relator uses unknown generator {g!r}")
            row[index[g]] += e
        rows.append(row)
    return rows


def presentation_abelianization(generators: Sequence[str | Gen], relators: Iterable) -> list[int]:
    """Invariant factors of the abelianization, one per generator.

    ``0`` entries are free ``Z`` summands and ``1`` entries trivial ones, so
    ``[1, 2, 0]`` is ``Z/2 + Z``.
    """
    rows = exponent_matrix(generators, relators)
    if not rows:
        return [0] * len(generators)
    factors = smith_normal_form(rows)
    return factors + [0] * (len(generators) - len(factors))


def describe_abelian_group(factors: Sequence[int]) -> str:
    parts = [("Z" if d == 0 else f"Z/{d}") for d in factors if d != 1]
    return " + ".join(parts) if parts else "0"
