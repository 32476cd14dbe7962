"""Lyndon words and the word formulas for the inverse transform.

Run with: python demos/lyndon_words.py
"""

from symfrob import (
    enumerate_lyndon,
    factorize,
    from_basis,
    fsurinv,
    fsurinv_e_words,
    genfunc_identity_check,
    pi_of_word,
    witt_count,
)
from symfrob.lyndon import format_factorization

# Unique non-increasing factorization into Lyndon words.
word = (2, 1, 2, 1, 2, 1, 2, 1, 1, 1, 1)
print("word:         ", "".join(map(str, word)))
print("factorization:", format_factorization(word))
print("factors:      ", factorize(word))
print("pi(word):     ", pi_of_word(word))

# Counts per length follow the divisor formula.
for ell in (2, 3):
    counts = [witt_count(ell, n) for n in range(1, 7)]
    print(f"\nLyndon words over {ell} letters, lengths 1..6: {counts}")

grouped = enumerate_lyndon(2, 4)
print("\nwords over two letters grouped by content (length <= 4):")
for content, words in sorted(grouped.items()):
    print(f"  content {content}: {words}")

# Words compute the inverse transform of elementary products: each word
# contributes a signed e function indexed by its factorization profile.
for lam in ((2,), (1, 1), (2, 1)):
    via_words = fsurinv_e_words(lam)
    direct = fsurinv(from_basis("e", lam))
    print(f"\nfsurinv(e{list(lam)}) via words == adjoint route: {via_words == direct}")

# Product identities over all Lyndon words, checked degree by degree.
print("\nreciprocal identity, two variables through degree 4:",
      genfunc_identity_check(2, 4, "reciprocal"))
print("product identity, one variable through degree 6:  ",
      genfunc_identity_check(1, 6, "product"))
