"""Exact linear algebra over Q and Q[i].

Rank and determinants use Bareiss fraction-free elimination: rows are first
scaled to integral entries (Z or Z[i]) and every later division is exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from numbers import Rational
from typing import Hashable, Iterable, Sequence

from .scalar import Scalar, as_scalar

__all__ = [
    "exact_rank",
    "determinant",
    "leading_principal_minors",
    "is_positive_definite",
    "solve",
    "is_nilpotent",
    "IncrementalEchelon",
    "identity",
    "zeros",
    "matmul",
    "matadd",
    "matsub",
    "matscale",
    "transpose",
    "trace",
    "commutator",
]

Matrix = list


def _integral_rows(m: Sequence[Sequence]) -> tuple[list[list], bool]:
    """Scale each row to integral entries; report whether any entry is non-real."""
    complex_ = any(isinstance(x, Scalar) and x.im for row in m for x in row)
    out = []
    for row in m:
        if complex_:
            vals = [as_scalar(x) for x in row]
            d = lcm(*(q.denominator for v in vals for q in (v.re, v.im))) if vals else 1
            out.append([Scalar(v.re * d, v.im * d) for v in vals])
        else:
            vals = [x.re if isinstance(x, Scalar) else Fraction(x) for x in row]
            d = lcm(*(v.denominator for v in vals)) if vals else 1
            out.append([int(v * d) for v in vals])
    return out, complex_


def _exact_div(a, b, complex_: bool):
    if complex_:
        return a / b
    q, r = divmod(a, b)
    assert r == 0, "Bareiss division must be exact"
    return q


def _bareiss(rows: list[list], complex_: bool) -> tuple[int, list]:
    """Forward Bareiss elimination in place; returns (rank, pivots)."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    prev = Scalar(1) if complex_ else 1
    rank = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank][col]
        prow = rows[rank]
        for r in range(rank + 1, nrows):
            row = rows[r]
            f = row[col]
            if f:
                for c in range(col + 1, ncols):
                    row[c] = _exact_div(p * row[c] - f * prow[c], prev, complex_)
            else:
                for c in range(col + 1, ncols):
                    if row[c]:
                        row[c] = _exact_div(p * row[c], prev, complex_)
            row[col] = 0
        pivots.append(p)
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank, pivots


def exact_rank(m: Sequence[Sequence]) -> int:
    """Rank over the fraction field of a rectangular matrix of exact numbers."""
    if not m or not m[0]:
        return 0
    width = len(m[0])
    if any(len(row) != width for row in m):
        raise ValueError("matrix rows have different lengths")
    rows, complex_ = _integral_rows(m)
    # eliminate along the shorter side
    if len(rows) > width:
        rows = [list(col) for col in zip(*rows)]
    rank, _ = _bareiss(rows, complex_)
    return rank


def determinant(m: Sequence[Sequence]):
    """Exact determinant; returns a Fraction for real input, else a Scalar."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    complex_ = any(isinstance(x, Scalar) and x.im for row in m for x in row)
    scales = []
    rows = []
    for row in m:
        if complex_:
            vals = [as_scalar(x) for x in row]
            d = lcm(*(q.denominator for v in vals for q in (v.re, v.im)))
            rows.append([Scalar(v.re * d, v.im * d) for v in vals])
        else:
            vals = [x.re if isinstance(x, Scalar) else Fraction(x) for x in row]
            d = lcm(*(v.denominator for v in vals))
            rows.append([int(v * d) for v in vals])
        scales.append(d)
    # track row swaps for the sign
    sign = 1
    prev = Scalar(1) if complex_ else 1
    for k in range(n):
        piv = next((r for r in range(k, n) if rows[r][k]), None)
        if piv is None:
            return Scalar(0) if complex_ else Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        for r in range(k + 1, n):
            f = rows[r][k]
            for c in range(k + 1, n):
                rows[r][c] = _exact_div(p * rows[r][c] - f * rows[k][c], prev, complex_)
            rows[r][k] = 0
        prev = p
    det = rows[n - 1][n - 1] * sign
    denom = 1
    for d in scales:
        denom *= d
    if complex_:
        return det / denom
    return Fraction(det, denom)


def _unpivoted_minors(m: Sequence[Sequence]) -> tuple[list, Fraction] | None:
    """Leading principal minors of ``d m`` by Bareiss without row swaps.

    ``d`` is the common denominator of all entries, returned alongside.  In
    unpivoted Bareiss the k-th pivot is exactly the k-th leading minor.
    Returns None if a zero pivot would force a swap.
    """
    n = len(m)
    complex_ = any(isinstance(x, Scalar) and x.im for row in m for x in row)
    vals = [[as_scalar(x) for x in row] for row in m]
    d = lcm(*(q.denominator for row in vals for v in row for q in (v.re, v.im))) if n else 1
    if complex_:
        rows = [[Scalar(v.re * d, v.im * d) for v in row] for row in vals]
    else:
        rows = [[int(v.re * d) for v in row] for row in vals]
    prev = Scalar(1) if complex_ else 1
    minors = []
    for k in range(n):
        p = rows[k][k]
        minors.append(p)
        if not p:
            if k == n - 1:
                break
            return None
        for r in range(k + 1, n):
            f = rows[r][k]
            row, prow = rows[r], rows[k]
            for c in range(k + 1, n):
                row[c] = _exact_div(p * row[c] - f * prow[c], prev, complex_)
        prev = p
    return minors, Fraction(d)


def leading_principal_minors(m: Sequence[Sequence]) -> list:
    n = len(m)
    fast = _unpivoted_minors(m)
    if fast is None:
        return [determinant([row[:k] for row in m[:k]]) for k in range(1, n + 1)]
    minors, d = fast
    out = []
    for k, x in enumerate(minors, start=1):
        x = as_scalar(x) / d ** k
        out.append(x if x.im else x.re)
    return out


def is_positive_definite(m: Sequence[Sequence]) -> bool:
    """Sylvester's criterion for a Hermitian matrix with exact entries."""
    n = len(m)
    for i in range(n):
        for j in range(i, n):
            if as_scalar(m[i][j]) != as_scalar(m[j][i]).conjugate():
                return False
    fast = _unpivoted_minors(m)
    if fast is None:
        return False  # a vanishing leading minor
    # scaling by d > 0 preserves the signs of all minors
    for minor in fast[0]:
        minor = as_scalar(minor)
        if minor.im or minor.re <= 0:
            return False
    return True


def is_nilpotent(m: Sequence[Sequence]) -> bool:
    """``m^n = 0`` for a square n x n matrix, by repeated squaring over Z or Z[i]."""
    n = len(m)
    if n == 0:
        return True
    vals = [[as_scalar(x) for x in row] for row in m]
    # one common denominator: a scalar multiple keeps nilpotency
    d = lcm(*(q.denominator for row in vals for v in row for q in (v.re, v.im)))
    if any(v.im for row in vals for v in row):
        rows = [[Scalar(v.re * d, v.im * d) for v in row] for row in vals]
    else:
        rows = [[int(v.re * d) for v in row] for row in vals]
    k = 1
    while True:
        if not any(x for row in rows for x in row):
            return True
        if k >= n:
            return False
        cols = list(zip(*rows))
        rows = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in rows]
        k *= 2


def solve(a: Sequence[Sequence], b: Sequence) -> list[Scalar] | None:
    """One exact solution of ``a x = b`` (free variables set to 0), or None."""
    nrows = len(a)
    ncols = len(a[0]) if nrows else 0
    aug = [[as_scalar(x) for x in row] + [as_scalar(bi)] for row, bi in zip(a, b)]
    pivcols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = aug[r][c].inverse()
        aug[r] = [x * inv for x in aug[r]]
        for i in range(nrows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivcols.append(c)
        r += 1
        if r == nrows:
            break
    if any(aug[i][ncols] for i in range(r, nrows)):
        return None
    x = [Scalar(0)] * ncols
    for i, c in enumerate(pivcols):
        x[c] = aug[i][ncols]
    return x


class IncrementalEchelon:
    """Sparse row echelon form grown one vector at a time.

    Vectors are dicts ``key -> exact number``.  ``add`` reduces the vector
    against the stored pivots and keeps it iff something survives, which is
    exactly a greedy maximal linearly independent selection.
    """

    def __init__(self):
        self._rows: dict[Hashable, dict] = {}  # pivot key -> row with pivot coeff 1
        self._order: list[Hashable] = []

    def __len__(self):
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: dict) -> dict:
        v = {k: as_scalar(x) for k, x in vec.items() if x}
        for key in self._order:
            c = v.get(key)
            if c:
                for k, x in self._rows[key].items():
                    nv = v.get(k, Scalar(0)) - c * x
                    if nv:
                        v[k] = nv
                    else:
                        v.pop(k, None)
        return v

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        key = min(v, key=_sort_key)
        inv = v[key].inverse()
        row = {k: x * inv for k, x in v.items()}
        # keep fully reduced: clear the new pivot from existing rows
        for okey, orow in self._rows.items():
            c = orow.get(key)
            if c:
                for k, x in row.items():
                    nv = orow.get(k, Scalar(0)) - c * x
                    if nv:
                        orow[k] = nv
                    else:
                        orow.pop(k, None)
        self._rows[key] = row
        self._order.append(key)
        return True

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def _sort_key(k):
    return (repr(type(k)), k) if not isinstance(k, tuple) else (sum(k), k)


def span_rank(vectors: Iterable[dict]) -> int:
    ech = IncrementalEchelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


# --- dense matrix helpers ---------------------------------------------------

def identity(n: int, one=1) -> Matrix:
    return [[Fraction(one) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matadd(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(r, s)] for r, s in zip(a, b)]


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(r, s)] for r, s in zip(a, b)]


def matscale(c, a: Matrix) -> Matrix:
    return [[c * x for x in row] for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def trace(a: Matrix):
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return matsub(matmul(a, b), matmul(b, a))


def conj_transpose(a: Matrix) -> Matrix:
    return [[as_scalar(x).conjugate() for x in col] for col in zip(*a)]


def is_rational_entry(x) -> bool:
    return isinstance(x, Rational) or (isinstance(x, Scalar) and not x.im)
