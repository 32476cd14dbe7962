"""A tour of the transform: forward, surjective, and inverse.

Run with: python demos/transform_basics.py
"""

from symfrob import (
    from_basis,
    frobenius_series,
    fsur,
    fsurinv,
    standard_series,
    to_basis,
    to_basis_int,
)


def show(title, mapping):
    print(f"\n{title}")
    for lam, c in sorted(mapping.items(), key=lambda kv: (sum(kv[0]), kv[0])):
        print(f"  {list(lam)}: {c}")


# The surjective transform keeps results inside the polynomial ring and
# preserves degree and leading term.
h22 = from_basis("h", (2, 2))
show("fsur(h[2,2]) in the h basis", to_basis_int(fsur(h22), "h"))

# Elementary functions are fixed points.
e6 = from_basis("e", (6,))
print("\nfsur(e[6]) == e[6]:", fsur(e6) == e6)

# Power sums map to divisor sums.
p12 = from_basis("p", (12,))
show("fsur(p[12]) in the p basis", to_basis(fsur(p12), "p"))

# The full transform multiplies by the complete homogeneous series, so it
# is an infinite series; ask for an explicit cutoff.
series = frobenius_series(from_basis("s", (2,)), 4)
show("F(s[2]) through degree 4, Schur basis", to_basis_int(series, "s"))
print("\nconstant input gives the complete homogeneous series:",
      frobenius_series(from_basis("p", ()), 5) == standard_series("H", 5))

# The inverse undoes fsur exactly.
print("\nfsurinv(fsur(h[2,2])) == h[2,2]:", fsurinv(fsur(h22)) == h22)
show("fsurinv(h[2]) in the e basis", to_basis_int(fsurinv(from_basis("h", (2,))), "e"))

# Falling factorial identity for powers of e_1.
e1 = from_basis("e", (1,))
lhs = fsurinv(e1**3)
rhs = e1 * (e1 - 1) * (e1 - 2)
print("\nfsurinv(e[1]^3) == e1(e1-1)(e1-2):", lhs == rhs)
