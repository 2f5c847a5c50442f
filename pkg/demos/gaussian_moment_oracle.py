"""Gaussian-moment oracle for the Fock inner product.

Computes <z^a, z^b> = (1/2pi) * integral of z^a conj(z)^b exp(-|z|^2/2) dx dy
for a single complex variable by exact symbolic integration, independently of
the closed form used in ``stratquant.fock``.  Several variables factor, so the
one-variable table is enough for any multi-index.

Run as a script to print the table and compare it with ``monomial_norm``.
"""

from functools import lru_cache
from itertools import product
from math import cos, exp, pi, sin

import sympy as sp

x, y = sp.symbols("x y", real=True)
_rho = sp.Symbol("rho", positive=True)


@lru_cache(maxsize=None)
def radial_moment(a: int) -> sp.Rational:
    """integral_0^oo rho^(2a) exp(-rho^2/2) rho drho."""
    return sp.integrate(_rho ** (2 * a + 1) * sp.exp(-_rho ** 2 / 2), (_rho, 0, sp.oo))


@lru_cache(maxsize=None)
def planar_moment(a: int, b: int) -> sp.Expr:
    """Normalised 2-D integral of z^a conj(z)^b against the Gaussian, in Cartesian form."""
    z, zb = x + sp.I * y, x - sp.I * y
    integrand = sp.expand(z ** a * zb ** b)
    weight = sp.exp(-(x ** 2 + y ** 2) / 2)
    total = 0
    for term in sp.Add.make_args(integrand):
        total += sp.integrate(term * weight, (x, -sp.oo, sp.oo), (y, -sp.oo, sp.oo))
    return sp.nsimplify(sp.simplify(total / (2 * sp.pi)))


def multi_moment(alpha, beta) -> sp.Expr:
    out = sp.Integer(1)
    for a, b in zip(alpha, beta):
        out *= planar_moment(a, b)
    return out


def numeric_moment(a: int, b: int) -> complex:
    """Plain quadrature in polar coordinates, as a floating-point sanity check."""
    from scipy import integrate

    def part(fn):
        val, _ = integrate.dblquad(
            lambda r, t: fn((a - b) * t) * r ** (a + b + 1) * exp(-r * r / 2),
            0, 2 * pi, 0, 40)
        return val / (2 * pi)

    return complex(part(cos), part(sin))


def multi_indices(m: int, max_total: int):
    return [e for e in product(range(max_total + 1), repeat=m) if sum(e) <= max_total]


if __name__ == "__main__":
    from stratquant.fock import monomial_norm

    print("radial moments 2^a a!:")
    for a in range(5):
        print(f"  a={a}: {radial_moment(a)}")
    print("one-variable table <z^a, z^b>:")
    for a in range(5):
        print("  " + "  ".join(f"{str(planar_moment(a, b)):>4}" for b in range(5)))
    bad = 0
    for m in (1, 2, 3):
        idx = multi_indices(m, 4)
        for al in idx:
            for be in idx:
                want = monomial_norm(al) if al == be else 0
                if multi_moment(al, be) != want:
                    bad += 1
        print(f"m={m}: {len(idx) ** 2} pairs checked")
    print("mismatches:", bad)
