# %% [markdown]
# # Palindromic automorphisms of free groups
#
# A palindromic automorphism sends every basis letter to a palindrome.  The
# group is generated by
#
# * `m_ij`: x_i -> x_j x_i x_j
# * `t_i`:  x_i -> x_i^-1
# * `a_ij`: swap x_i and x_j
#
# Generator words compose left to right, so `m12 t1` applies `m12` first.

# %%
from palindromic import AutWord, evaluate, parse_word
from palindromic.endo import abelianization_matrix, apply, compose, palindromic_shape
from palindromic.words import format_word, is_palindrome

w = AutWord.parse("m12 t1 m21", 2)
e = evaluate(w)
print(w, "->", e)
print("image of x1 x2:", format_word(apply(e, parse_word("x1 x2", 2))))

# %% [markdown]
# Every image is a palindrome, and evaluation turns word concatenation into
# composition.

# %%
for i, img in enumerate(e.images, start=1):
    print(f"x{i} -> {format_word(img)}   palindrome: {is_palindrome(img)}")

u, v = AutWord.parse("m12^2", 3), AutWord.parse("m31 a23", 3)
assert evaluate(u * v) == compose(evaluate(u), evaluate(v))

# %% [markdown]
# Row i of the abelianization matrix holds the exponent sums of the image of
# x_i.  For words in the `m` generators alone it is the identity mod 2.

# %%
M = abelianization_matrix(evaluate(AutWord.parse("m12 m23^-1 m31 m13", 3)))
print(M)
print("mod 2:\n", M % 2)

# %% [markdown]
# Images of `m`-words look like `u x_i^(+-1) reverse(u)`.  The centre letter
# can come out inverted, which `palindromic_shape` reports as non-elementary.

# %%
e = evaluate(AutWord.parse("m13 m31^-1", 3))
print(format_word(e.images[0]))
print("(palindromic, elementary):", palindromic_shape(e))
