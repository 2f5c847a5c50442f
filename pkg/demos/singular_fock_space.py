"""O(s)-invariant polynomials in the Fock space and the restriction maps between levels.

Invariants are polynomials in w_jk = z_j . z_k.  Their number in each degree
matches the highest-weight count, the Gram matrices are positive definite,
and restricting from level s to s - 1 kills exactly the span involving the
top minor.
"""

from stratquant.fock import (
    costratified_restrict,
    delta_minor,
    euler,
    gram,
    invariant_basis,
    restriction_rank,
    u_span,
)
from stratquant.exactalg import is_positive_definite
from stratquant.repcount import kernel_dim, section_dim

B = invariant_basis(2, 2, 2)
print("degree-2 invariants at s = l = 2:", [str(w) for w in B.w_reps])
print("section_dim:", section_dim(2, 2, 2))
G = gram(B)
for row in G:
    print("  ", [str(x) for x in row])
print("positive definite:", is_positive_definite(G))

f = B[0]
print("\nEuler operator on", B.w_reps[0], "gives", "4 f" if euler(f) == f * 4 else euler(f))

det = delta_minor(2, 2, 2)
print("det w restricted to s=1:", costratified_restrict(det, 1))
print("rank drop", len(B) - restriction_rank(B, 1), "vs kernel_dim", kernel_dim(2, 2, 2))

sq = delta_minor(1, 3, 3) * delta_minor(1, 3, 3)
print("\nu(3)-span of delta_1^2 at s = l = 3 has dimension", len(u_span([sq])))
