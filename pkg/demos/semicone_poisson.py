"""The reduced Poisson algebra of one particle in the plane at zero angular momentum.

The invariants x, y, r of the flat bracket close under the bracket, and the
relation r^2 = x^2 + y^2 generates a Poisson ideal.  Tampering with one
bracket destroys that, and the failure is detected with an explicit witness.
"""

from stratquant.exactalg import Poly
from stratquant.poisson import adjoint_quotient, flat_algebra, semicone
from stratquant.reduction import semicone_invariants

flat = flat_algebra(1)
inv = semicone_invariants(1)
for name, p in inv.items():
    print(f"{name} = {p}")
print("{x, y} =", flat.bracket(inv["x"], inv["y"]))
print("{x, r} =", flat.bracket(inv["x"], inv["r"]))
print("{y, r} =", flat.bracket(inv["y"], inv["r"]))

A = semicone()
print("\npresented algebra, relation rewritten as", A.relations)
print("Jacobi witness:", A.jacobi_witness())
print("Poisson ideal:", A.is_poisson_ideal())

bad = A.perturbed("x", "y", Poly.const(1, A.variables))
print("\nwith {x, y} = 2r + 1 instead:", bad.is_poisson_ideal())

Q = adjoint_quotient()
print("\nadjoint quotient of SL(2,C) with the forced tau-brackets")
for (a, b), p in sorted(Q.table_dict().items()):
    print(f"  {{{a}, {b}}} = {p}")
print("Jacobi witness:", Q.jacobi_witness(), " Poisson ideal:", Q.is_poisson_ideal().passed)
