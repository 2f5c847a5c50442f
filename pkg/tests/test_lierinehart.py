import random

import pytest

from stratquant.checks import dirac_sweep, random_poly
from stratquant.exactalg import I, Poly
from stratquant.lierinehart import LieRinehartAlgebra, NoPrequantumSign, PrequantumModule
from stratquant.poisson import flat_algebra, semicone

R2 = LieRinehartAlgebra(flat_algebra(1))
R4 = LieRinehartAlgebra(flat_algebra(2))
SC = LieRinehartAlgebra(semicone())
M2 = PrequantumModule(R2)
M4 = PrequantumModule(R4)


def p2(text):
    return Poly.from_text(text, R2.generators)


# --- differentials and the anchor ---------------------------------------------------

def test_d_examples():
    xy = LieRinehartAlgebra(flat_algebra(1))
    q, p = xy.A.gens()
    assert xy.d(q * p) == xy.from_pairs([(q, "p"), (p, "q")])
    assert xy.d(7).is_zero()
    x, y, r = SC.A.gen("x"), SC.A.gen("y"), SC.A.gen("r")
    assert SC.d(x * x + y * y - r * r).is_zero()
    # in the quotient, d(r^2) = 2 r dr although r^2 rewrites to x^2 + y^2
    assert SC.d(r * r) == SC.dgen("r").scale(2 * r)
    assert not SC.dgen("r").is_zero()


def test_pi_sharp_examples():
    assert R2.pi_sharp(R2.dgen("q"), p2("p")) == p2("1")
    assert SC.pi_sharp(SC.dgen("x"), SC.A.gen("y")) == 2 * SC.A.gen("r")


def test_pi_sharp_is_a_derivation():
    rng = random.Random(2)
    for lr in (R2, R4, SC):
        for _ in range(30):
            al = lr.element({g: random_poly(rng, lr.generators, 1, 2) for g in lr.generators})
            f, g = random_poly(rng, lr.generators), random_poly(rng, lr.generators)
            assert al(f * g) == lr.A.reduce(f * al(g) + g * al(f))


# --- brackets ------------------------------------------------------------------------------

def test_bracket_examples():
    q, p = R2.A.gens()
    assert R2.bracket(R2.d(q), R2.d(p)) == R2.d(R2.A.bracket(q, p))
    assert R2.bracket(R2.dgen("q").scale(q), R2.dgen("p")) == R2.dgen("q")
    rng = random.Random(4)
    for lr in (R2, SC):
        al = lr.element({g: random_poly(rng, lr.generators) for g in lr.generators})
        assert lr.bracket(al, al).is_zero()


def test_du_dv_is_d_of_bracket():
    rng = random.Random(9)
    for lr in (R2, R4, SC):
        for _ in range(20):
            u, v = random_poly(rng, lr.generators), random_poly(rng, lr.generators)
            assert lr.bracket(lr.d(u), lr.d(v)) == lr.d(lr.A.bracket(u, v))


@pytest.mark.parametrize("lr", [R2, R4, SC], ids=["R2", "R4", "semicone"])
def test_lie_rinehart_axioms(lr):
    rng = random.Random(len(lr.generators))
    A = lr.A
    for _ in range(70):
        al = lr.element({g: random_poly(rng, lr.generators, 1, 2) for g in lr.generators})
        be = lr.element({g: random_poly(rng, lr.generators, 1, 2) for g in lr.generators})
        a, b = random_poly(rng, lr.generators), random_poly(rng, lr.generators)
        assert lr.bracket(al, be.scale(a)) == be.scale(al(a)) + lr.bracket(al, be).scale(a)
        assert al.scale(a)(b) == A.reduce(a * al(b))


def test_lie_rinehart_jacobi_on_semicone():
    rng = random.Random(12)
    for _ in range(10):
        al, be, ga = (SC.element({g: random_poly(rng, SC.generators, 1, 2) for g in SC.generators})
                      for _ in range(3))
        jac = (SC.bracket(al, SC.bracket(be, ga)) + SC.bracket(be, SC.bracket(ga, al))
               + SC.bracket(ga, SC.bracket(al, be)))
        assert jac.is_zero()


# --- the central extension --------------------------------------------------------------------

def test_ext_bracket_examples():
    q, p = R2.A.gens()
    res = R2.ext_bracket(R2.ext_pair(0, q), R2.ext_pair(0, p))
    assert res.scalar == p2("-1") and res.diff.is_zero()
    assert R2.ext_bracket(R2.ext(q), R2.ext(p)).is_zero()
    u = p2("q^2*p + 3*p")
    assert R2.ext_bracket(R2.ext_pair(u, u), R2.ext_pair(u, u)).is_zero()


def test_ext_bracket_generating_pair_formula():
    rng = random.Random(8)
    A = R4.A
    for _ in range(30):
        a, u, b, v = (random_poly(rng, R4.generators) for _ in range(4))
        res = R4.ext_bracket(R4.ext_pair(a, u), R4.ext_pair(b, v))
        assert res.scalar == A.reduce(A.bracket(u, b) + A.bracket(a, v) - A.bracket(u, v))
        assert res.diff == R4.d(A.bracket(u, v))


@pytest.mark.parametrize("lr", [R2, R4, SC], ids=["R2", "R4", "semicone"])
def test_ext_jacobi(lr):
    rng = random.Random(3)
    for _ in range(20):
        X, Y, Z = (lr.ext_pair(random_poly(rng, lr.generators), random_poly(rng, lr.generators, 3))
                   for _ in range(3))
        jac = (lr.ext_bracket(X, lr.ext_bracket(Y, Z)) + lr.ext_bracket(Y, lr.ext_bracket(Z, X))
               + lr.ext_bracket(Z, lr.ext_bracket(X, Y)))
        assert jac.is_zero()


# --- prequantum module -------------------------------------------------------------------------

def test_sign_is_selected_and_unique():
    assert M2.sign == 1 and M4.sign == 1
    with pytest.raises(NoPrequantumSign):
        PrequantumModule(R2, sign=-1)


def test_chi_on_the_kernel_is_multiplication():
    q, p = R2.A.gens()
    x = p2("q*p^2 + 1")
    assert M2.chi(R2.ext(q), x) == q * x * I


def test_prequantize_examples():
    q, p = R2.A.gens()
    one = p2("1")
    assert M2.prequantize(5, q) == 5 * q
    assert M2.prequantize(q, one) == q
    assert M2.prequantize(p, one) == Poly.zero(R2.generators)
    # q^ = q - i d/dp and p^ = i d/dq, since theta(X_p) = -p cancels the multiplication
    assert M2.prequantize(q, p) == q * p - I
    assert M2.prequantize(p, q) == I * Poly.const(1, R2.generators)


def test_chi_is_a_representation():
    rng = random.Random(6)
    for lr, M in ((R2, M2), (R4, M4)):
        for _ in range(15):
            X = lr.ext_pair(random_poly(rng, lr.generators), random_poly(rng, lr.generators, 3))
            Y = lr.ext_pair(random_poly(rng, lr.generators), random_poly(rng, lr.generators, 3))
            for deg in range(4):
                x = random_poly(rng, lr.generators, deg, 2)
                assert not M.representation_defect(X, Y, x)


def test_dirac_examples():
    q, p = R2.A.gens()
    for probe in ("1", "q", "p", "q^2", "q*p", "p^3", "q^2*p"):
        assert not M2.dirac_residual(q, p, p2(probe))
    assert not M2.dirac_residual(q * q, p * p, q)


@pytest.mark.parametrize("M", [M2, M4], ids=["R2", "R4"])
def test_dirac_on_all_monomial_pairs(M):
    n, bad = dirac_sweep(M, 3)
    assert bad is None and n > 0


def test_potential_free_mutant_fails_dirac():
    bare = PrequantumModule.without_potential(R2)
    rng = random.Random(10)
    for _ in range(20):
        a, b = random_poly(rng, R2.generators, 3), random_poly(rng, R2.generators, 3)
        probe = random_poly(rng, R2.generators, 2)
        # the missing central term is exactly -{a,b} times the probe
        assert bare.dirac_residual(a, b, probe) == R2.A.reduce(-R2.A.bracket(a, b) * probe)
    q, p = R2.A.gens()
    assert bare.dirac_residual(q, p, p2("1")) == p2("-1")


def test_wrong_sign_fails_dirac():
    flipped = PrequantumModule(R2, sign=-1, validate=False)
    n, bad = dirac_sweep(flipped, 1)
    assert bad is not None
