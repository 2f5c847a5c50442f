import random
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stratquant.repcount import (
    DeltaMonomial,
    WeightTuple,
    enumerate_monomials,
    kernel_dim,
    oracle_dim,
    section_dim,
    weight_of,
    weyl_dim,
)


def exps(s, k):
    return [m.exponents for m in enumerate_monomials(s, k)]


def test_enumerate_examples():
    assert exps(2, 2) == [(2, 0), (0, 1)]
    assert exps(1, 3) == [(3,)]
    assert exps(3, 3) == [(3, 0, 0), (1, 1, 0), (0, 0, 1)]
    assert exps(3, 0) == [(0, 0, 0)]
    assert all(m.k == 5 for m in enumerate_monomials(3, 5))


def test_delta_monomial_rejects_negative():
    with pytest.raises(ValueError):
        DeltaMonomial((1, -1))


def test_weights():
    assert weight_of(DeltaMonomial((2,)), 2).parts == (4, 0)
    assert weight_of(DeltaMonomial((0, 1)), 2).parts == (2, 2)
    assert weight_of(DeltaMonomial((1, 1, 0)), 3).parts == (4, 2, 0)


def test_weyl_examples():
    assert weyl_dim((0, 0, 0)) == 1
    assert weyl_dim((2, 0), 2) == 3
    assert weyl_dim((2, 2), 2) == 1
    assert weyl_dim((4, 0), 2) == 5
    assert weyl_dim((1, 0, 0)) == 3
    assert weyl_dim((2, 1, 0)) == 8
    with pytest.raises(ValueError):
        weyl_dim((0, 1))
    with pytest.raises(ValueError):
        weyl_dim((2, 0), 3)


def test_section_dim_examples():
    assert section_dim(1, 2, 2) == 5
    assert section_dim(2, 2, 2) == 6
    assert section_dim(2, 2, 1) == 3
    with pytest.raises(ValueError):
        section_dim(3, 2, 1)


def test_kernel_dim_examples():
    assert kernel_dim(2, 2, 2) == 1
    assert kernel_dim(2, 2, 1) == 0
    d = kernel_dim(2, 3, 2)
    assert d == section_dim(2, 3, 2) - section_dim(1, 3, 2) >= 0
    with pytest.raises(ValueError):
        kernel_dim(1, 2, 2)


def test_oracle_examples():
    assert oracle_dim(1, 2, 2, 11) == 5
    assert oracle_dim(2, 2, 3, 11) == 10 == comb(5, 2)
    assert oracle_dim(1, 1, 4, 11) == 1


CELLS = [(s, l, k) for l in range(1, 4) for s in range(1, l + 1) for k in range(5)]


@pytest.mark.parametrize("s, l, k", CELLS)
def test_section_dim_matches_oracle(s, l, k):
    want = section_dim(s, l, k)
    assert oracle_dim(s, l, k, 1000 + k) == want
    assert oracle_dim(s, l, k, 2000 + k) == want


@pytest.mark.parametrize("l", [1, 2, 3])
@pytest.mark.parametrize("k", range(5))
def test_top_level_is_full_polynomial_ring(l, k):
    assert section_dim(l, l, k) == comb(k + l * (l + 1) // 2 - 1, k)


@pytest.mark.parametrize("l", [2, 3, 4])
@pytest.mark.parametrize("k", range(6))
def test_kernel_dims_telescope(l, k):
    for s in range(2, l + 1):
        assert sum(kernel_dim(t, l, k) for t in range(2, s + 1)) == section_dim(s, l, k) - section_dim(1, l, k)


weights = st.integers(1, 5).flatmap(
    lambda l: st.lists(st.integers(0, 12), min_size=l, max_size=l).map(lambda xs: tuple(sorted(xs, reverse=True))))


@given(weights)
def test_weyl_dim_is_positive_integer(lam):
    d = weyl_dim(WeightTuple(lam))
    assert isinstance(d, int) and d >= 1


def test_weyl_dim_on_many_weights():
    rng = random.Random(5)
    for _ in range(1000):
        l = rng.randint(1, 5)
        lam = sorted((rng.randint(0, 10) for _ in range(l)), reverse=True)
        assert weyl_dim(lam, l) >= 1


def test_weyl_dim_shift_invariance():
    # tensoring with a power of det does not change the dimension
    assert weyl_dim((5, 3, 1)) == weyl_dim((4, 2, 0))
