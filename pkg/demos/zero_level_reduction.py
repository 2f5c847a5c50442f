"""Sampling the zero level of the O(s) momentum map for l particles in R^s.

On the zero level all position and momentum vectors are pairwise parallel.
The orbit image W = (q + ip)(q + ip)^T is a complex symmetric matrix of
rank at most min(s, l), and mu_Sp is nilpotent there.
"""

from stratquant.checks import zero_level_report
from stratquant.reduction import adjoint_point, mu_O, mu_Sp, orbit_image, sample_zero_level, semicone_coordinates

pt = sample_zero_level(2, 2, 1, seed=3)[0]
print("q =", pt.to_json_obj()["q"])
print("p =", pt.to_json_obj()["p"])
print("mu_O =", mu_O(pt))
print("mu_Sp =", mu_Sp(pt))
W = orbit_image(pt)
print("W has rank", W.rank)

for pt in sample_zero_level(2, 1, 3, seed=1):
    x, y, r = semicone_coordinates(pt)
    print(f"(x, y, r) = ({x}, {y}, {r}),  x^2 + y^2 - r^2 = {x * x + y * y - r * r}")

print()
for s in (1, 2, 3):
    for l in (1, 2, 3):
        rep = zero_level_report(s, l, 200, seed=10 * s + l)
        print(f"s={s} l={l}: rank = min(s,l) on {rep['rank_max']}/200, nilpotent mu_Sp on {rep['mu_Sp_ok']}/200")

print("\nSteinberg map z -> z + 1/z, with the two singular vertices:")
for z in (1, -1, 2):
    P = adjoint_point(z)
    X, Y, tau = P.coordinates()
    print(f"  z={z}: (X, Y, tau) = ({X}, {Y}, {tau}), relation residual {P.relation_residual()}")
