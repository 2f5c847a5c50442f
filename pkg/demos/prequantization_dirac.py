"""Prequantization of the flat plane through the Lie-Rinehart central extension.

Every observable a acts on the module by a^ = -i chi(0, da) + a.  The sign
of the connection is picked so that the Dirac condition holds; dropping the
potential term leaves a residual of exactly -{a, b}.
"""

from stratquant.checks import dirac_sweep
from stratquant.exactalg import Poly
from stratquant.lierinehart import LieRinehartAlgebra, PrequantumModule
from stratquant.poisson import flat_algebra

R2 = LieRinehartAlgebra(flat_algebra(1))
M = PrequantumModule(R2)
q, p = R2.A.gens()
one = Poly.const(1, R2.generators)
print("selected sign:", M.sign)
print("q^(1) =", M.prequantize(q, one))
print("p^(1) =", M.prequantize(p, one))
print("q^(p) =", M.prequantize(q, p))
print("p^(q) =", M.prequantize(p, q))

n, bad = dirac_sweep(M, 3)
print(f"\nDirac residual {{a,b}}^ - i[a^, b^] on {n} monomial pairs and probes:", "all zero" if bad is None else bad)

stripped = PrequantumModule.without_potential(R2)
print("without the potential, residual for (q, p) on 1:", stripped.dirac_residual(q, p, one))

R4 = LieRinehartAlgebra(flat_algebra(2))
n, bad = dirac_sweep(PrequantumModule(R4), 2)
print(f"R^4, degree <= 2: {n} residuals,", "all zero" if bad is None else bad)
