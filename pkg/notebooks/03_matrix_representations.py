# %% [markdown]
# # Integer matrix pictures
#
# Acting on the abelianization Z^n turns each automorphism into an integer
# matrix.  In rank two this map is injective on the palindromic group, and its
# image is described by eight explicit matrix shapes.

# %%
import random

import numpy as np

from palindromic.endo import AutWord
from palindromic.pia import PiA2Element, random_autword
from palindromic.rep import (
    eight_form_classify,
    kernel_witness_check,
    parity_criteria,
    psi,
    sanov_phi,
    verify_matrix_relations,
)

for lam in ("id", "s", "d", "sd", "r", "sr", "dr", "sdr"):
    M = sanov_phi(PiA2Element.make("", lam))
    print(f"{lam:<4} {M.tolist()}  form {eight_form_classify(M).form_id}")

# %% [markdown]
# Random elements always land in one of the eight shapes with the defining
# constraint satisfied exactly.

# %%
rng = random.Random(1)
for _ in range(5):
    w = random_autword(rng, 2, 8)
    M = sanov_phi(w)
    fm = eight_form_classify(M)
    print(f"{str(w):<40} {M.tolist()} -> form {fm.form_id}, residual {fm.constraint_residual}")

# %% [markdown]
# From rank three on, the matrix picture loses information: a commutator of
# two `m` generators acts trivially on Z^3 but not on the free group.

# %%
r = kernel_witness_check()
print(r["word"], "matrix identity:", r["matrix_is_identity"],
      "automorphism identity:", r["endomorphism_is_identity"])
print(r["endomorphism"])

# %% [markdown]
# Commutator identities among the level-2 transvections.

# %%
for row in verify_matrix_relations():
    print(row["relation"], row["pass"])

# %% [markdown]
# Parity: `m`-words give matrices congruent to the identity mod 2, while the
# full group only keeps "one odd entry per column".

# %%
w = AutWord.parse("m12 m23^-1 m31 t2 a23", 3)
print(psi(w).tolist(), parity_criteria(psi(w)))
print(np.array_equal(psi(AutWord.parse("m12 m21", 2)), sanov_phi(AutWord.parse("m12 m21", 2))))
