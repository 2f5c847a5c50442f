"""Highest weights of delta-monomials, Weyl dimensions and the rank oracle.

The degree-k part of the coordinate ring of complex symmetric l x l
matrices of rank <= s decomposes under U(l) into irreducibles whose highest
weight vectors are the monomials ``delta_1^a1 ... delta_s^as`` with
``a1 + 2 a2 + ... + s as = k``, where ``delta_j`` is the leading principal
j x j minor.  ``delta_j`` has weight ``(2, ..., 2, 0, ..., 0)`` (j twos).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .exactalg import exact_rank, monomials_of_degree

__all__ = [
    "DeltaMonomial",
    "WeightTuple",
    "enumerate_monomials",
    "weight_of",
    "weyl_dim",
    "section_dim",
    "oracle_dim",
    "kernel_dim",
    "sym_coordinates",
    "random_low_rank_symmetric",
]


@dataclass(frozen=True)
class DeltaMonomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("exponents must be nonnegative")

    @property
    def s(self) -> int:
        return len(self.exponents)

    @property
    def k(self) -> int:
        return sum((j + 1) * e for j, e in enumerate(self.exponents))

    def involves_top(self) -> bool:
        """True if the last delta appears (it spans the restriction kernel)."""
        return bool(self.exponents) and self.exponents[-1] > 0


@dataclass(frozen=True)
class WeightTuple:
    parts: tuple[int, ...]

    def __post_init__(self):
        p = tuple(self.parts)
        if any(a < b for a, b in zip(p, p[1:])):
            raise ValueError(f"weight {p} is not nonincreasing")
        if p and p[-1] < 0:
            raise ValueError(f"weight {p} has negative entries")
        object.__setattr__(self, "parts", p)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)


def enumerate_monomials(s: int, k: int) -> list[DeltaMonomial]:
    """All ``(a_1, ..., a_s)`` with ``sum j a_j = k``, lexicographically descending."""
    if s < 0 or k < 0:
        raise ValueError("s and k must be nonnegative")

    def rec(j: int, remaining: int):
        # j runs over 1..s
        if j > s:
            if remaining == 0:
                yield ()
            return
        for e in range(remaining // j, -1, -1):
            for rest in rec(j + 1, remaining - j * e):
                yield (e,) + rest

    return [DeltaMonomial(t) for t in rec(1, k)]


def weight_of(mono: DeltaMonomial, l: int) -> WeightTuple:
    if mono.s > l:
        raise ValueError("more deltas than rows")
    lam = [0] * l
    for j, e in enumerate(mono.exponents):
        for i in range(j + 1):
            lam[i] += 2 * e
    return WeightTuple(tuple(lam))


def weyl_dim(lam, l: int | None = None) -> int:
    """``prod_{i<j} (lam_i - lam_j + j - i) / (j - i)`` for U(l)."""
    lam = lam if isinstance(lam, WeightTuple) else WeightTuple(tuple(lam))
    if l is not None and len(lam) != l:
        raise ValueError(f"weight has length {len(lam)}, expected {l}")
    p = lam.parts
    n = len(p)
    num = prod(p[i] - p[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"Weyl formula did not give an integer for {p}")
    return q


def section_dim(s: int, l: int, k: int) -> int:
    if s > l:
        raise ValueError("section_dim needs s <= l")
    return sum(weyl_dim(weight_of(m, l), l) for m in enumerate_monomials(s, k))


def kernel_dim(s: int, l: int, k: int) -> int:
    """Dimension of the kernel of restriction from level s to level s - 1."""
    if s < 2:
        raise ValueError("kernel_dim needs s >= 2")
    if s > l:
        raise ValueError("kernel_dim needs s <= l")
    return sum(weyl_dim(weight_of(m, l), l) for m in enumerate_monomials(s, k) if m.involves_top())


# --- brute-force oracle ---------------------------------------------------------

def sym_coordinates(l: int) -> list[tuple[int, int]]:
    """Index pairs ``(j, k)``, ``j <= k``, of the coordinates w_jk."""
    return [(j, k) for j in range(l) for k in range(j, l)]


def random_low_rank_symmetric(l: int, s: int, rng: random.Random) -> list[list[Fraction]]:
    """``T T^T`` for a random l x s matrix T with integer entries in [-9, 9].

    Rational T would only rescale each evaluation row, so integers lose
    nothing; the range is wide enough that coincident directions, which make
    the oracle under-count, are rare.
    """
    t = [[rng.randint(-9, 9) for _ in range(s)] for _ in range(l)]
    return [[Fraction(sum(t[i][a] * t[j][a] for a in range(s))) for j in range(l)] for i in range(l)]


def evaluation_matrix(s: int, l: int, k: int, npoints: int, seed: int) -> list[list[Fraction]]:
    rng = random.Random(seed)
    coords = sym_coordinates(l)
    monos = monomials_of_degree(len(coords), k)
    rows = []
    for _ in range(npoints):
        m = random_low_rank_symmetric(l, s, rng)
        vals = [m[j][kk] for j, kk in coords]
        rows.append([prod((v ** e for v, e in zip(vals, exp) if e), start=Fraction(1)) for exp in monos])
    return rows


def oracle_dim(s: int, l: int, k: int, seed: int, *, extra: int = 4) -> int:
    """Rank of degree-k w-monomials evaluated at random rank <= s points.

    Uses ``#monomials + extra`` sample points.  The rank is a lower bound on
    the true dimension that is attained for generic samples; callers compare
    two seeds to confirm it has stabilized.
    """
    n = comb(k + l * (l + 1) // 2 - 1, k)
    return exact_rank(evaluation_matrix(s, l, k, n + extra, seed))


def top_level_dim(l: int, k: int) -> int:
    """Degree-k polynomials on symmetric l x l matrices."""
    return comb(k + l * (l + 1) // 2 - 1, k)
