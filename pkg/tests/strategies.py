"""Hypothesis strategies for exact scalars, polynomials and matrices."""

from fractions import Fraction

from hypothesis import strategies as st

from stratquant.exactalg import Poly, Scalar

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 6))
nonzero_rationals = rationals.filter(bool)
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)


def polys(variables, max_degree=3, max_terms=5, coeffs=scalars):
    n = len(variables)
    exps = st.lists(st.integers(0, max_degree), min_size=n, max_size=n).filter(
        lambda e: sum(e) <= max_degree).map(tuple)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda t: Poly(variables, t))


def matrices(rows, cols, entries=rationals):
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@st.composite
def rect_matrices(draw, max_dim=12, entries=st.integers(-3, 3).map(Fraction)):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    # low-rank products show up often enough to exercise rank deficiency
    if draw(st.booleans()):
        k = draw(st.integers(1, min(r, c)))
        a = draw(matrices(r, k, entries))
        b = draw(matrices(k, c, entries))
        return [[sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(c)] for i in range(r)]
    return draw(matrices(r, c, entries))
