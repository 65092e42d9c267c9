# %% [markdown]
# # Involutions in rank two
#
# Every element of the rank-two group factors uniquely as `f . lam`, with `f`
# a word in `m12, m21` (a free group) and `lam` one of the eight signed
# permutations.  Whether `f . lam` has order two depends only on the shape of `f`
# once `lam` is known, and every involution is conjugate to one of five
# representatives.

# %%
from collections import Counter

from palindromic.endo import AutWord
from palindromic.involutions import (
    REPRESENTATIVES,
    class_invariant,
    classify,
    involution_census,
    is_involution,
)
from palindromic.pia import ES2, PiA2Element, pia2_normal_form

for text in ("t1 m12", "t1 m12 a12 m21", "a12 m12 a12"):
    print(f"{text:<16} = {pia2_normal_form(AutWord.parse(text, 2))}")

# %%
for f, lam in [("m12 m21 m12", "s"), ("m12 m21", "s"), ("m12 m21^-1", "r"), ("", "sr")]:
    g = PiA2Element.make(f, lam)
    print(f"{str(g):<16} involution: {is_involution(g)}")

# %% [markdown]
# Classification returns the representative together with a conjugator `h`
# such that `h^-1 g h` is the representative.

# %%
g = PiA2Element.make("m21 m12^5 m21", "s")
cls = classify(g)
print(cls.name, "via", cls.conjugator)
for step in cls.steps:
    print("  ", step)

# %% [markdown]
# The five representatives are separated by a cheap invariant: the class of
# `lam` and, for reflections, the parities of the two exponent sums.

# %%
for name, rep in REPRESENTATIVES.items():
    print(f"{name:<8} {class_invariant(rep)}")

# %% [markdown]
# An exhaustive census up to word length 5 checks the criterion against
# squaring for every element and classifies every involution found.

# %%
report = involution_census(5)
print(report.total, "elements,", report.involutions, "involutions, pass:", report.passed)
print(Counter(report.class_counts).most_common())
