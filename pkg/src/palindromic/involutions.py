"""Involutions of Pi A_2 and their five conjugacy classes.

An element is written ``f * lam`` (see :class:`~palindromic.pia.PiA2Element`).
Since ``(f lam)^2 = f f^(lam^-1) lam^2``, it is an involution exactly when
``lam^2 = 1`` and ``f f^(lam^-1) = 1`` in the free group on mu12, mu21, and
``f lam`` is not the identity.  By the type of ``lam``:

* sigma, delta: ``f`` is a palindrome in mu12, mu21;
* sigma*delta: ``f = 1``;
* rho, sigma*delta*rho: ``f = q * swap(q)^-1`` where ``swap`` exchanges
  mu12 and mu21;
* identity, sigma*rho, delta*rho: never (``sr`` and ``dr`` square to ``sd``).

Every involution is conjugate to exactly one of sigma, sigma*delta, rho,
mu12*sigma, mu21*sigma; :func:`classify` builds the conjugator and checks it.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import chain

from .endo import AutWord, alpha, compose, evaluate, t
from .pia import ES2, MU2, PiA2Element, pia2_normal_form
from .words import FreeWord, exponent_sum, is_palindrome, words_of_length

__all__ = [
    "REPRESENTATIVES",
    "InvolutionClass",
    "NotAnInvolutionError",
    "is_involution",
    "is_involution_by_squaring",
    "conjugate",
    "classify",
    "class_invariant",
    "fp_pattern",
    "swap_mu",
    "involution_census",
]

SIGMA_TYPE = ("s", "d")
RHO_TYPE = ("r", "sdr")


class NotAnInvolutionError(ValueError):
    pass


class InvolutionCheckError(AssertionError):
    """The case criterion and the squaring oracle disagree."""


#: representative name -> element
REPRESENTATIVES: dict[str, PiA2Element] = {
    "s": PiA2Element.make("", "s"),
    "sd": PiA2Element.make("", "sd"),
    "r": PiA2Element.make("", "r"),
    "m12 . s": PiA2Element.make("m12", "s"),
    "m21 . s": PiA2Element.make("m21", "s"),
}


def swap_mu(f: FreeWord) -> FreeWord:
    """Exchange mu12 and mu21 letterwise (the action of rho)."""
    return FreeWord(2, [3 - s if s > 0 else -(3 + s) for s in f.syms])


def fp_pattern(f: FreeWord) -> bool:
    """Syllable test for ``f * rho`` being an involution.

    Writing ``f = mu12^a1 mu21^b1 ... mu12^ak mu21^bk`` (``a1``, ``bk`` may be
    zero) the condition is ``a_l = -b_(k-l+1)`` and ``b_l = -a_(k-l+1)``.
    """
    syl = f.syllables()
    if syl and syl[0][0] == 2:
        syl = [(1, 0)] + syl
    if syl and syl[-1][0] == 1:
        syl = syl + [(2, 0)]
    a = [e for _, e in syl[0::2]]
    b = [e for _, e in syl[1::2]]
    k = len(a)
    return all(a[l] == -b[k - 1 - l] and b[l] == -a[k - 1 - l] for l in range(k))


def _criterion(g: PiA2Element) -> bool:
    name = g.lam.name
    if name in SIGMA_TYPE:
        return is_palindrome(g.f)
    if name == "sd":
        return g.f.is_identity()
    if name in RHO_TYPE:
        return fp_pattern(g.f)
    # id: identity or infinite order; sr, dr square to sd
    return False


def is_involution_by_squaring(g: PiA2Element) -> bool:
    """Oracle: square the automorphism of F_2 and compare with the identity."""
    e = g.evaluate()
    return compose(e, e).is_identity() and not e.is_identity()


def is_involution(g: PiA2Element, cross_check: bool = True) -> bool:
    answer = _criterion(g)
    if cross_check and answer != is_involution_by_squaring(g):
        raise InvolutionCheckError(f"criterion says {answer} for {g}, squaring disagrees")
    return answer


def _as_element(h: AutWord | PiA2Element) -> PiA2Element:
    return h if isinstance(h, PiA2Element) else pia2_normal_form(h)


def conjugate(g: PiA2Element, h: AutWord | PiA2Element) -> PiA2Element:
    """Normal form of ``h^-1 g h``."""
    hh = _as_element(h)
    return hh.inverse() * g * hh


@dataclass
class InvolutionClass:
    representative: PiA2Element
    conjugator: AutWord
    steps: list[str] = field(default_factory=list)

    @property
    def name(self) -> str:
        return str(self.representative)

    def to_json(self) -> dict:
        return {
            "representative": self.name,
            "conjugator": str(self.conjugator),
            "steps": list(self.steps),
        }


def _mu_autword(f: FreeWord) -> AutWord:
    return AutWord(2, [(MU2[i - 1], e) for i, e in f.syllables()])


def _peel_palindrome(f: FreeWord) -> tuple[FreeWord, int, int]:
    """Split a palindrome as ``p * m^a * reverse(p)``; return ``(p, m, a)``."""
    syl = f.syllables()
    if not syl:
        return f, 1, 0
    mid = len(syl) // 2
    index, a = syl[mid]
    head = list(chain.from_iterable([i if e > 0 else -i] * abs(e) for i, e in syl[:mid]))
    return FreeWord(2, head), index, a


def classify(g: PiA2Element) -> InvolutionClass:
    """Conjugate ``g`` to one of the five representatives.

    Raises :class:`NotAnInvolutionError` if ``g`` is not an involution.  The
    returned conjugator ``h`` satisfies ``h^-1 g h == representative``, checked
    both in normal form and on the automorphisms of F_2.
    """
    if not is_involution(g, cross_check=False):
        raise NotAnInvolutionError(f"{g} is not an involution")
    name = g.lam.name
    steps: list[str] = []
    if name in SIGMA_TYPE:
        p, index, a = _peel_palindrome(g.f)
        c = a // 2
        steps.append(f"peel prefix {_mu_autword(p)} off both ends")
        steps.append(f"reduce central m{'12' if index == 1 else '21'}^{a} by exponent {c}")
        h = _mu_autword(p) * AutWord.of(2, MU2[index - 1], c)
        core = "" if a % 2 == 0 else ("m12" if index == 1 else "m21")
        if name == "d":
            steps.append("conjugate by rho to turn delta into sigma")
            h = h * AutWord.of(2, alpha(1))
            core = {"": "", "m12": "m21", "m21": "m12"}[core]
        rep = REPRESENTATIVES[f"{core} . s" if core else "s"]
    elif name == "sd":
        h = AutWord.identity(2)
        rep = REPRESENTATIVES["sd"]
        steps.append("sigma*delta is central")
    else:
        half = len(g.f) // 2
        q = FreeWord(2, g.f.syms[:half])
        steps.append(f"split f as q swap(q)^-1 with q = {_mu_autword(q)}")
        h = _mu_autword(q)
        if name == "sdr":
            steps.append("conjugate sigma*delta*rho to rho by sigma")
            h = h * AutWord.of(2, t(1))
        rep = REPRESENTATIVES["r"]

    if conjugate(g, h) != rep:
        raise InvolutionCheckError(f"conjugator {h} fails in normal form for {g}")
    lhs = evaluate(h.inverse() * g.to_autword() * h)
    if lhs != rep.evaluate():
        raise InvolutionCheckError(f"conjugator {h} fails on automorphisms for {g}")
    return InvolutionClass(rep, h, steps)


def class_invariant(g: PiA2Element) -> tuple[str, tuple[int, int] | None]:
    """A conjugacy invariant of an involution.

    The ES_2 class of ``lam`` (``"sigma"``, ``"rho"`` or ``"sigma-delta"``) and,
    for the sigma class, the parities of the mu12 and mu21 exponent sums of
    ``f`` after normalising ``lam`` to sigma (a delta element is read through
    conjugation by rho, which swaps the two parities).
    """
    if not is_involution(g, cross_check=False):
        raise NotAnInvolutionError(f"{g} is not an involution")
    name = g.lam.name
    if name in SIGMA_TYPE:
        p = (exponent_sum(g.f, 1) % 2, exponent_sum(g.f, 2) % 2)
        return "sigma", (p if name == "s" else (p[1], p[0]))
    if name == "sd":
        return "sigma-delta", None
    return "rho", None


def all_elements(max_len: int):
    """Every ``f * lam`` with ``|f| <= max_len``, strata in increasing length."""
    for length in range(max_len + 1):
        for f in words_of_length(2, length):
            for lam in ES2.values():
                yield PiA2Element(f, lam)


@dataclass
class CensusReport:
    max_len: int
    total: int = 0
    involutions: int = 0
    disagreements: list[str] = field(default_factory=list)
    classification_failures: list[str] = field(default_factory=list)
    class_counts: Counter = field(default_factory=Counter)
    invariants: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        distinct = len(set(self.invariants.values())) == len(REPRESENTATIVES)
        return not self.disagreements and not self.classification_failures and distinct

    def to_json(self) -> dict:
        return {
            "max_len": self.max_len,
            "total": self.total,
            "involutions": self.involutions,
            "disagreements": self.disagreements,
            "classification_failures": self.classification_failures,
            "class_counts": dict(self.class_counts),
            "representative_invariants": {
                k: [cls, list(par) if par else None] for k, (cls, par) in self.invariants.items()
            },
            "pass": self.passed,
        }


def involution_census(max_len: int = 6) -> CensusReport:
    """Exhaustive check over all ``f * lam`` with ``|f| <= max_len``.

    Compares the case criterion with squaring, classifies every involution
    and checks that the five representatives have distinct invariants.
    """
    report = CensusReport(max_len)
    for g in all_elements(max_len):
        report.total += 1
        crit = _criterion(g)
        if crit != is_involution_by_squaring(g):
            report.disagreements.append(str(g))
            continue
        if not crit:
            continue
        report.involutions += 1
        try:
            cls = classify(g)
        except (InvolutionCheckError, NotAnInvolutionError) as exc:
            report.classification_failures.append(f"{g}: {exc}")
            continue
        if class_invariant(g) != class_invariant(cls.representative):
            report.classification_failures.append(f"{g}: invariant differs from {cls.name}")
        report.class_counts[cls.name] += 1
    report.invariants = {k: class_invariant(v) for k, v in REPRESENTATIVES.items()}
    return report

