"""Integer matrix representations.

``psi`` sends an automorphism of F_n to its action on the abelianization
(row convention, see :mod:`palindromic.endo`).  Restricted to rank 2 it is
the Sanov-type representation ``phi`` with

    mu12 -> [[1, 2], [0, 1]]    mu21 -> [[1, 0], [2, 1]]
    sigma -> diag(-1, 1)        delta -> diag(1, -1)     rho -> [[0, 1], [1, 0]]

Matrices are numpy arrays of Python ints, so products never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Sequence

import numpy as np
import sympy

from .endo import (
    AutWord,
    Endomorphism,
    Gen,
    abelianization_matrix,
    evaluate,
    identity_matrix,
    int_matrix,
    mu,
    mu_order,
)
from .pia import PiA2Element, collins_relations
from .smith import presentation_abelianization, smith_normal_form  # noqa: F401

__all__ = [
    "transvection",
    "generator_matrix",
    "word_matrix",
    "psi",
    "sanov_phi",
    "FormMatch",
    "eight_form_matches",
    "eight_form_classify",
    "parity_criteria",
    "matrix_inverse",
    "matrix_commutator",
    "kernel_witness_check",
    "verify_matrix_relations",
    "smith_normal_form",
    "presentation_abelianization",
    "epia_presentation",
    "u3_presentation",
]


def transvection(n: int, i: int, j: int, a: int) -> np.ndarray:
    """Identity plus ``a`` in position ``(i, j)`` (1-based, ``i != j``)."""
    if i == j or not (1 <= i <= n and 1 <= j <= n):
        raise ValueError(f"invalid transvection indices ({i}, {j}) for n = {n}")
    M = identity_matrix(n)
    M[i - 1, j - 1] = int(a)
    return M


def generator_matrix(n: int, g: Gen, sign: int = 1) -> np.ndarray:
    """Matrix of a generator from the closed-form table (not via evaluation)."""
    if g.kind == "mu":
        return transvection(n, g.i, g.j, 2 * sign)
    M = identity_matrix(n)
    if g.kind == "t":
        M[g.i - 1, g.i - 1] = -1
    else:
        M[[g.i - 1, g.j - 1]] = M[[g.j - 1, g.i - 1]]
    return M


def word_matrix(w: AutWord) -> np.ndarray:
    """Product of generator matrices in word order."""
    out = identity_matrix(w.rank)
    for g, e in w.letters:
        step = generator_matrix(w.rank, g, 1 if e > 0 else -1)
        k = abs(e) % 2 if g.involutive else abs(e)
        for _ in range(k):
            out = out @ step
    return out


def psi(x: AutWord | Endomorphism) -> np.ndarray:
    """Action on the abelianization, computed from the evaluated automorphism."""
    e = evaluate(x) if isinstance(x, AutWord) else x
    return abelianization_matrix(e)


def sanov_phi(g: PiA2Element | AutWord) -> np.ndarray:
    """The 2x2 representation of Pi A_2, as a product of generator matrices."""
    w = g.to_autword() if isinstance(g, PiA2Element) else g
    if w.rank != 2:
        raise ValueError("sanov_phi is defined on rank 2")
    return word_matrix(w)


def det(M: np.ndarray) -> int:
    return int(sympy.Matrix(M.tolist()).det())


def matrix_inverse(M: np.ndarray) -> np.ndarray:
    """Exact inverse of a unimodular integer matrix."""
    S = sympy.Matrix(M.tolist())
    d = S.det()
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    return int_matrix((S.adjugate() * d).tolist())


def matrix_commutator(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """``[A, B] = A^-1 B^-1 A B``."""
    return matrix_inverse(A) @ matrix_inverse(B) @ A @ B


# -- eight-form image characterization -------------------------------------

@dataclass(frozen=True)
class FormMatch:
    form_id: int
    sign: int
    a11: int
    a12: int
    a21: int
    a22: int

    @property
    def constraint_residual(self) -> int:
        return self.a11 + self.a22 - self.a12 * self.a21 + 4 * self.a11 * self.a22

    def to_json(self) -> dict:
        return {
            "form_id": self.form_id,
            "sign": "+" if self.sign > 0 else "-",
            "a": [self.a11, self.a12, self.a21, self.a22],
            "constraint_residual": self.constraint_residual,
        }


def _div(v: int, d: int):
    return v // d if v % d == 0 else None


def _shape_params(shape: int, m) -> tuple | None:
    """Solve one of the four shapes for ``(a11, a12, a21, a22)``; ``None`` if impossible."""
    (p, q), (r, s) = m
    if shape == 1:  # [[1+4a11, 2a12], [2a21, 1+4a22]]
        vals = (_div(p - 1, 4), _div(q, 2), _div(r, 2), _div(s - 1, 4))
    elif shape == 2:  # [[1+4a11, -2a12], [2a21, -1-4a22]]
        vals = (_div(p - 1, 4), _div(-q, 2), _div(r, 2), _div(-s - 1, 4))
    elif shape == 3:  # [[2a12, -1-4a11], [1+4a22, -2a21]]
        vals = (_div(-q - 1, 4), _div(p, 2), _div(-s, 2), _div(r - 1, 4))
    else:  # [[2a12, 1+4a11], [1+4a22, 2a21]]
        vals = (_div(q - 1, 4), _div(p, 2), _div(s, 2), _div(r - 1, 4))
    return None if any(v is None for v in vals) else vals


def eight_form_matches(M) -> list[FormMatch]:
    """All of the eight shapes (four, each with sign +/-) that ``M`` fits.

    ``form_id`` runs 1..8 as +shape1, -shape1, +shape2, ..., -shape4.  Only
    matches with zero constraint residual are returned.
    """
    m = [[int(v) for v in row] for row in np.asarray(M, dtype=object)]
    if len(m) != 2 or any(len(row) != 2 for row in m):
        raise ValueError("eight-form classification needs a 2x2 matrix")
    d = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if d not in (1, -1):
        raise ValueError(f"matrix is not unimodular (det = {d})")
    out = []
    for shape in range(1, 5):
        for k, sign in enumerate((1, -1)):
            vals = _shape_params(shape, [[sign * v for v in row] for row in m])
            if vals is None:
                continue
            fm = FormMatch(2 * (shape - 1) + k + 1, sign, *vals)
            if fm.constraint_residual == 0:
                out.append(fm)
    return out


def eight_form_classify(M) -> FormMatch | None:
    """First matching form in listed order, or ``None``."""
    matches = eight_form_matches(M)
    return matches[0] if matches else None


def parity_criteria(M) -> tuple[bool, bool | None, bool]:
    """``(column_pattern, row_pattern_2x2, level2)``.

    ``column_pattern``: every column has exactly one odd entry.
    ``row_pattern_2x2``: every row has one odd and one even entry (``None``
    unless ``M`` is 2x2).  ``level2``: ``M`` is the identity mod 2.
    """
    A = np.asarray(M, dtype=object)
    n, k = A.shape
    if n != k:
        raise ValueError("parity criteria need a square matrix")
    odd = [[int(A[i, j]) % 2 for j in range(n)] for i in range(n)]
    column = all(sum(odd[i][j] for i in range(n)) == 1 for j in range(n))
    row = None if n != 2 else all(sum(r) == 1 for r in odd)
    level2 = all(odd[i][j] == (1 if i == j else 0) for i in range(n) for j in range(n))
    return column, row, level2


# -- kernel witness and matrix relations ------------------------------------

def kernel_witness_check() -> dict:
    """``[mu23, mu21]`` acts trivially on Z^3 but is not the identity of F_3.

    The control ``[mu12, mu21]`` has non-trivial matrix.
    """
    n = 3
    w = AutWord.of(n, mu(2, 3)).comm(AutWord.of(n, mu(2, 1)))
    control = AutWord.of(n, mu(1, 2)).comm(AutWord.of(n, mu(2, 1)))
    e = evaluate(w)
    m = psi(w)
    mc = psi(control)
    ident = identity_matrix(n)
    matrix_trivial = bool(np.array_equal(m, ident))
    generator_route = bool(np.array_equal(word_matrix(w), m))
    endo_nontrivial = not e.is_identity()
    control_nontrivial = not np.array_equal(mc, ident)
    return {
        "word": str(w),
        "matrix": _json_matrix(m),
        "matrix_is_identity": matrix_trivial,
        "generator_product_agrees": generator_route,
        "endomorphism": e.to_json(),
        "endomorphism_is_identity": not endo_nontrivial,
        "control_word": str(control),
        "control_matrix": _json_matrix(mc),
        "pass": matrix_trivial and generator_route and endo_nontrivial and control_nontrivial,
    }


def verify_matrix_relations() -> list[dict]:
    """Commutator identities among ``t12(2), t13(2), t23(2)`` in SL(3, Z)."""
    t12, t13, t23 = (transvection(3, i, j, 2) for i, j in ((1, 2), (1, 3), (2, 3)))
    ident = identity_matrix(3)
    cases = [
        ("[t13, t23] = 1", matrix_commutator(t13, t23), ident),
        ("[t12, t13] = 1", matrix_commutator(t12, t13), ident),
        ("[t12, t23] = t13^2", matrix_commutator(t12, t23), t13 @ t13),
    ]
    return [
        {
            "relation": name,
            "lhs": _json_matrix(lhs),
            "rhs": _json_matrix(rhs),
            "pass": bool(np.array_equal(lhs, rhs)),
        }
        for name, lhs, rhs in cases
    ]


def _json_matrix(M) -> list[list[str]]:
    """Rows of decimal strings (safe for integers of any size)."""
    return [[str(int(v)) for v in row] for row in np.asarray(M, dtype=object)]


def matrix_from_json(rows: Sequence[Sequence]) -> np.ndarray:
    return int_matrix([[int(v) for v in row] for row in rows])


def product(ms: Sequence[np.ndarray], n: int) -> np.ndarray:
    return reduce(lambda a, b: a @ b, ms, identity_matrix(n))


# -- presentations ----------------------------------------------------------

def epia_presentation(n: int) -> tuple[list[Gen], list[tuple[AutWord, AutWord]]]:
    """Generators and defining relations (as ``(lhs, rhs)``) of EPiA_n."""
    return mu_order(n), [(lhs, rhs) for _, lhs, rhs in collins_relations(n)]


def u3_presentation() -> tuple[list[Gen], list[tuple[AutWord, AutWord]]]:
    """The upper-triangular subgroup presentation on mu12, mu13, mu23."""
    m12, m13, m23 = (AutWord.of(3, mu(i, j)) for i, j in ((1, 2), (1, 3), (2, 3)))
    relators = [
        (m13.comm(m23), AutWord.identity(3)),
        (m13 * m23 * m12, m12 * m23 * m13.inverse()),
    ]
    return [mu(1, 2), mu(1, 3), mu(2, 3)], relators
