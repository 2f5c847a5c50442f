import random
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stratquant.checks import zero_level_passes, zero_level_report
from stratquant.exactalg import Scalar, exact_rank, is_nilpotent
from stratquant.exactalg.linalg import matmul, trace, transpose
from stratquant.liealg import in_sp, so_algebra, sp_algebra
from stratquant.reduction import (
    OffZeroLevel,
    PhasePoint,
    act,
    adjoint_point,
    conjugate_by,
    mu_O,
    mu_Sp,
    orbit_image,
    orthogonal_generators,
    sample_zero_level,
    semicone_coordinates,
    signed_permutation,
    steinberg_general,
)
from strategies import nonzero_rationals, rationals

F = Fraction


def pt1(q, p):
    return PhasePoint.from_lists([q], [p])


def test_mu_O_examples():
    assert mu_O(pt1([1, 0], [0, 1])) == [[0, 1], [-1, 0]]
    assert mu_O(pt1([1, 0], [2, 0])) == [[0, 0], [0, 0]]
    pt = PhasePoint.from_lists([[1, 2, 3], [4, 5, 6]], [[0, 0, 0], [0, 0, 0]])
    assert all(x == 0 for row in mu_O(pt) for x in row)


def test_mu_Sp_examples():
    m = mu_Sp(pt1([1, 0], [2, 0]))
    assert m == [[2, -1], [4, -2]]
    assert trace(m) == 0 and m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0
    assert mu_Sp(pt1([0, 0], [0, 0])) == [[0, 0], [0, 0]]


def test_orbit_image_examples():
    W = orbit_image(pt1([1, 0], [2, 0]))
    assert W[0, 0] == Scalar(-3, 4)
    zero = PhasePoint.from_lists([[0, 0], [0, 0]], [[0, 0], [0, 0]])
    assert orbit_image(zero).rank == 0
    with pytest.raises(OffZeroLevel):
        orbit_image(pt1([1, 0], [0, 1]))


def test_sampler_is_deterministic_and_on_level():
    a = sample_zero_level(2, 2, 20, 7)
    assert a == sample_zero_level(2, 2, 20, 7)
    assert a != sample_zero_level(2, 2, 20, 8)
    for pt in a:
        assert all(x == 0 for row in mu_O(pt) for x in row)
    assert orbit_image(a[0]).rank == 2
    assert all(orbit_image(pt)[0, 0] for pt in sample_zero_level(3, 1, 20, 1))


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_mu_O_equivariance(s, l, data):
    q = [[data.draw(rationals) for _ in range(s)] for _ in range(l)]
    p = [[data.draw(rationals) for _ in range(s)] for _ in range(l)]
    pt = PhasePoint.from_lists(q, p)
    perm = data.draw(st.permutations(range(s)))
    signs = data.draw(st.lists(st.sampled_from([-1, 1]), min_size=s, max_size=s))
    g = signed_permutation(perm, signs)
    assert mu_O(act(g, pt)) == conjugate_by(g, mu_O(pt))


@given(st.integers(1, 3), st.integers(1, 3), st.data())
def test_mu_Sp_lands_in_sp(s, l, data):
    q = [[data.draw(rationals) for _ in range(s)] for _ in range(l)]
    p = [[data.draw(rationals) for _ in range(s)] for _ in range(l)]
    assert in_sp(mu_Sp(PhasePoint.from_lists(q, p)), l)


def test_mu_O_invariant_under_rotation_of_momenta():
    # mu_Sp is O(s)-invariant; mu_O is equivariant for the 3-4-5 rotation too
    pt = PhasePoint.from_lists([[1, 2], [F(1, 2), 3]], [[0, 1], [2, -1]])
    for g in orthogonal_generators(2):
        assert mu_Sp(act(g, pt)) == mu_Sp(pt)
        assert mu_O(act(g, pt)) == conjugate_by(g, mu_O(pt))


@pytest.mark.parametrize("s", [1, 2, 3])
@pytest.mark.parametrize("l", [1, 2, 3])
def test_zero_level_statistics(s, l):
    rep = zero_level_report(s, l, 200, 100 * s + l)
    assert zero_level_passes(rep), rep


def test_semicone_coordinates():
    x, y, r = semicone_coordinates(pt1([1, 0], [2, 0]))
    assert (x, y, r) == (-3, 4, 5)
    assert x * x + y * y == r * r


def test_ranks_never_exceed_both_sides():
    rng = random.Random(0)
    for _ in range(50):
        s, l = rng.randint(1, 3), rng.randint(1, 3)
        pt = sample_zero_level(s, l, 1, rng.randrange(1000))[0]
        assert orbit_image(pt).rank <= min(s, l)
        assert exact_rank([list(r) for r in orbit_image(pt).entries]) == orbit_image(pt).rank


def test_mu_Sp_nilpotent_on_zero_level():
    for s, l in ((1, 1), (2, 2), (3, 2), (2, 3)):
        for pt in sample_zero_level(s, l, 30, 4):
            assert is_nilpotent(mu_Sp(pt))
    assert not is_nilpotent(mu_Sp(pt1([1, 0], [0, 1])))


# --- Killing forms -----------------------------------------------------------------------

@pytest.mark.parametrize("s", [3, 4])
def test_killing_so(s):
    lie = so_algebra(s)
    rng = random.Random(s)
    for _ in range(100):
        a = lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])
        b = lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])
        assert (s - 2) * trace(matmul(transpose(a), b)) == -lie.killing(a, b)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_killing_sp(l):
    lie = sp_algebra(l)
    rng = random.Random(l)
    for _ in range(100):
        a = lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])
        b = lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])
        assert lie.killing(a, b) == 2 * (l + 1) * trace(matmul(a, b))


def test_killing_matrix_matches_ad_traces():
    for lie in (so_algebra(4), sp_algebra(2)):
        rng = random.Random(0)
        for _ in range(10):
            a = lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])
            b = lie.element([rng.randint(-3, 3) for _ in range(lie.dim)])
            assert lie.killing(a, b) == lie.killing_via_ad(a, b)


def test_structure_constants_are_consistent():
    for lie in (so_algebra(3), so_algebra(4), sp_algebra(1), sp_algebra(2)):
        assert lie.jacobi_defect() == 0
    assert sp_algebra(3).dim == 21 and so_algebra(4).dim == 6


# --- adjoint quotient ---------------------------------------------------------------------------

@pytest.mark.parametrize("z, expected", [
    (Scalar(1), (2, 0, 0)),
    (Scalar(0, 1), (0, 0, 1)),
    (Scalar(2), (F(5, 2), 0, 0)),
    (Scalar(-1), (-2, 0, 0)),
])
def test_adjoint_point_examples(z, expected):
    P = adjoint_point(z)
    assert P.coordinates() == expected
    assert P.relation_residual() == 0
    assert Scalar(P.X, P.Y) == z + z.inverse()


def test_adjoint_point_rejects_zero():
    with pytest.raises(ValueError):
        adjoint_point(0)


@given(nonzero_rationals, rationals)
def test_adjoint_relation_and_weyl_symmetry(a, b):
    z = Scalar(a, b)
    P, Q = adjoint_point(z), adjoint_point(z.inverse())
    assert P.relation_residual() == 0
    assert P.coordinates() == Q.coordinates()
    assert P.steinberg == Q.steinberg


def test_steinberg_general():
    z = Scalar(F(2, 3), F(1, 5))
    assert steinberg_general([z, z.inverse()]) == [adjoint_point(z).steinberg]
    assert steinberg_general([1, 1, 1]) == [3, 3]
    zs = [Scalar(2), Scalar(0, 1), Scalar(0, F(-1, 2))]
    first = steinberg_general(zs)
    assert all(steinberg_general(list(p)) == first for p in permutations(zs))
    with pytest.raises(ValueError):
        steinberg_general([2, 2])
