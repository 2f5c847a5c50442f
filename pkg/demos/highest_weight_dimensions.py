"""Dimensions of the costratified quantum spaces from highest weights.

Each monomial delta_1^a1 ... delta_s^as with a1 + 2 a2 + ... = k is a
highest weight vector; the Weyl formula turns its weight into a dimension.
The evaluation oracle recomputes the same numbers by brute force.
"""

from stratquant.repcount import enumerate_monomials, kernel_dim, oracle_dim, section_dim, weight_of, weyl_dim

for m in enumerate_monomials(3, 3):
    lam = weight_of(m, 3)
    print(f"exponents {m.exponents}: weight {lam.parts}, dimension {weyl_dim(lam, 3)}")

print("\n s l k  section  oracle  kernel")
for l in (1, 2, 3):
    for s in range(1, l + 1):
        for k in range(4):
            kd = kernel_dim(s, l, k) if s >= 2 else "-"
            print(f" {s} {l} {k}  {section_dim(s, l, k):7d}  {oracle_dim(s, l, k, seed=1):6d}  {kd!s:>6}")
