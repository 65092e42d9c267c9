"""Palindromic automorphisms of free groups.

Conventions: automorphism words act left to right (``m12 t1`` applies
``m12`` first), ``g^h = h^-1 g h`` and ``[g, h] = g^-1 h^-1 g h``.
"""

from .endo import AutWord, Endomorphism, Gen, alpha, evaluate, is_IA, mu, mu_order, t
from .pia import PiA2Element, SignedPermutation, pia2_normal_form
from .words import FreeWord, parse_word

__all__ = [
    "AutWord",
    "Endomorphism",
    "FreeWord",
    "Gen",
    "PiA2Element",
    "SignedPermutation",
    "alpha",
    "evaluate",
    "is_IA",
    "mu",
    "mu_order",
    "parse_word",
    "pia2_normal_form",
    "t",
]

__version__ = "0.1.0"
