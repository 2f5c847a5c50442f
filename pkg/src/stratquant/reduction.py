"""Momentum maps, the zero angular momentum level and the SL(2, C) adjoint quotient.

Phase space is ``(R^{2s})^l`` with particles ``(q_j, p_j)``; the complex
structure is fixed as ``z_j = q_j + i p_j``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Sequence

from .exactalg import Poly, Scalar, as_scalar, exact_rank
from .exactalg.linalg import matmul, transpose
from .liealg import in_sp

__all__ = [
    "PhasePoint",
    "SymMatrixC",
    "AdjointPoint",
    "OffZeroLevel",
    "mu_O",
    "mu_Sp",
    "sample_zero_level",
    "orbit_image",
    "adjoint_point",
    "steinberg_general",
    "semicone_coordinates",
    "semicone_invariants",
    "signed_permutation",
    "act",
]


class OffZeroLevel(ValueError):
    """The point does not have zero angular momentum."""


def _dot(u: Sequence, v: Sequence):
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class PhasePoint:
    s: int
    l: int
    q: tuple[tuple[Fraction, ...], ...]
    p: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        q = tuple(tuple(Fraction(x) for x in v) for v in self.q)
        p = tuple(tuple(Fraction(x) for x in v) for v in self.p)
        if len(q) != self.l or len(p) != self.l:
            raise ValueError(f"expected {self.l} position and momentum vectors")
        if any(len(v) != self.s for v in q + p):
            raise ValueError(f"vectors must have length {self.s}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "p", p)

    @classmethod
    def from_lists(cls, q, p) -> PhasePoint:
        return cls(len(q[0]), len(q), tuple(map(tuple, q)), tuple(map(tuple, p)))

    @property
    def z(self) -> list[list[Scalar]]:
        return [[Scalar(a, b) for a, b in zip(qj, pj)] for qj, pj in zip(self.q, self.p)]

    def energy(self) -> Fraction:
        return sum((_dot(v, v) for v in self.q + self.p), Fraction(0))

    def to_json_obj(self) -> dict:
        fmt = lambda vs: [[str(x) for x in v] for v in vs]  # noqa: E731
        return {"q": fmt(self.q), "p": fmt(self.p)}


def act(g: Sequence[Sequence], pt: PhasePoint) -> PhasePoint:
    """The O(s) action ``(q_j, p_j) -> (g q_j, g p_j)``."""
    gq = tuple(tuple(_dot(row, v) for row in g) for v in pt.q)
    gp = tuple(tuple(_dot(row, v) for row in g) for v in pt.p)
    return PhasePoint(pt.s, pt.l, gq, gp)


def signed_permutation(perm: Sequence[int], signs: Sequence[int]) -> list[list[Fraction]]:
    n = len(perm)
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, (j, e) in enumerate(zip(perm, signs)):
        m[i][j] = Fraction(e)
    return m


def mu_O(pt: PhasePoint) -> list[list[Fraction]]:
    """Angular momentum ``sum_j q_j p_j^T - p_j q_j^T`` in so(s)."""
    s = pt.s
    m = [[Fraction(0)] * s for _ in range(s)]
    for qj, pj in zip(pt.q, pt.p):
        for a in range(s):
            for b in range(s):
                m[a][b] += qj[a] * pj[b] - pj[a] * qj[b]
    return m


def mu_Sp(pt: PhasePoint) -> list[list[Fraction]]:
    """``[[ (q_j.p_k), -(q_j.q_k) ], [ (p_j.p_k), -(p_j.q_k) ]]`` in sp(l)."""
    l = pt.l
    m = [[Fraction(0)] * (2 * l) for _ in range(2 * l)]
    for j in range(l):
        for k in range(l):
            m[j][k] = _dot(pt.q[j], pt.p[k])
            m[j][l + k] = -_dot(pt.q[j], pt.q[k])
            m[l + j][k] = _dot(pt.p[j], pt.p[k])
            m[l + j][l + k] = -_dot(pt.p[j], pt.q[k])
    assert in_sp(m, l)
    return m


def is_zero_matrix(m) -> bool:
    return all(not x for row in m for x in row)


def _random_rational(rng: random.Random, num: int = 6, den: int = 4, *, nonzero: bool = False) -> Fraction:
    a = rng.randint(1, num) * rng.choice((-1, 1)) if nonzero else rng.randint(-num, num)
    return Fraction(a, rng.randint(1, den))


def sample_zero_level(s: int, l: int, count: int, seed: int) -> list[PhasePoint]:
    """Exact points of ``mu_O^{-1}(0)`` with ``p_j = c_j q_j`` (parallel pairs).

    This covers the maximal-rank stratum generically but is not a uniform
    sample of the zero level.  Position entries have nonzero numerators so
    that single-particle samples never land on the vertex by accident.
    """
    if s < 1 or l < 1:
        raise ValueError("s and l must be positive")
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = tuple(tuple(_random_rational(rng, nonzero=True) for _ in range(s)) for _ in range(l))
        c = [_random_rational(rng) for _ in range(l)]
        p = tuple(tuple(cj * x for x in qj) for cj, qj in zip(c, q))
        out.append(PhasePoint(s, l, q, p))
    return out


@dataclass(frozen=True)
class SymMatrixC:
    n: int
    entries: tuple[tuple[Scalar, ...], ...]

    def __post_init__(self):
        e = tuple(tuple(as_scalar(x) for x in row) for row in self.entries)
        if len(e) != self.n or any(len(row) != self.n for row in e):
            raise ValueError("entries must be n x n")
        for j in range(self.n):
            for k in range(j):
                if e[j][k] != e[k][j]:
                    raise ValueError("matrix is not symmetric")
        object.__setattr__(self, "entries", e)

    def __getitem__(self, jk):
        j, k = jk
        return self.entries[j][k]

    @cached_property
    def rank(self) -> int:
        return exact_rank([list(r) for r in self.entries])

    def to_json_obj(self) -> list:
        return [[{"re": _fmt(x.re), "im": _fmt(x.im)} for x in row] for row in self.entries]


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def orbit_image(pt: PhasePoint, *, check: bool = True) -> SymMatrixC:
    """``W_jk = z_j . z_k`` (complex bilinear) for a zero-level point."""
    if check and not is_zero_matrix(mu_O(pt)):
        raise OffZeroLevel("orbit_image is only defined on the zero angular momentum level")
    z = pt.z
    rows = [[sum((a * b for a, b in zip(z[j], z[k])), Scalar()) for k in range(pt.l)] for j in range(pt.l)]
    return SymMatrixC(pt.l, tuple(map(tuple, rows)))


def semicone_coordinates(pt: PhasePoint) -> tuple[Fraction, Fraction, Fraction]:
    """``(x, y, r)`` with ``x + i y = W_11`` and ``r = |q|^2 + |p|^2`` (l = 1)."""
    if pt.l != 1:
        raise ValueError("semicone coordinates need a single particle")
    w = orbit_image(pt)[0, 0]
    return w.re, w.im, pt.energy()


def semicone_invariants(s: int) -> dict[str, Poly]:
    """x, y, r as O(s)-invariant quadratics on R^{2s} (one particle).

    With ``x = (|q|^2 - |p|^2)/2``, ``y = q.p`` and ``r = (|q|^2 + |p|^2)/2``
    the canonical bracket ``{q_a, p_a} = 1`` reproduces the semicone table.
    """
    qs = [f"q{a + 1}" for a in range(s)] if s > 1 else ["q"]
    ps = [f"p{a + 1}" for a in range(s)] if s > 1 else ["p"]
    vs = tuple(qs + ps)
    q = [Poly.var(v, vs) for v in qs]
    p = [Poly.var(v, vs) for v in ps]
    qq = sum((x * x for x in q), Poly.zero(vs))
    pp = sum((x * x for x in p), Poly.zero(vs))
    qp = sum((a * b for a, b in zip(q, p)), Poly.zero(vs))
    half = Fraction(1, 2)
    return {"x": (qq - pp) * half, "y": qp, "r": (qq + pp) * half}


# --- adjoint quotient of SL(2, C) --------------------------------------------

@dataclass(frozen=True)
class AdjointPoint:
    z: Scalar

    def __post_init__(self):
        z = as_scalar(self.z)
        if not z:
            raise ValueError("z must be nonzero")
        object.__setattr__(self, "z", z)

    @property
    def x(self) -> Fraction:
        return self.z.re

    @property
    def y(self) -> Fraction:
        return self.z.im

    @property
    def r2(self) -> Fraction:
        return self.z.norm2()

    @property
    def X(self) -> Fraction:
        return self.x + self.x / self.r2

    @property
    def Y(self) -> Fraction:
        return self.y - self.y / self.r2

    @property
    def tau(self) -> Fraction:
        return self.y * self.y / self.r2

    @property
    def steinberg(self) -> Scalar:
        return self.z + self.z.inverse()

    def relation_residual(self) -> Fraction:
        X, Y, t = self.X, self.Y, self.tau
        return Y * Y - (X * X + Y * Y + 4 * (t - 1)) * t

    def coordinates(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.X, self.Y, self.tau

    def as_point(self) -> dict[str, Fraction]:
        return {"X": self.X, "Y": self.Y, "tau": self.tau}


def adjoint_point(z) -> AdjointPoint:
    return AdjointPoint(as_scalar(z))


def steinberg_general(zs: Sequence) -> list[Scalar]:
    """Elementary symmetric functions ``sigma_1 .. sigma_{n-1}`` of ``zs``.

    ``zs`` are the diagonal entries of a point of the maximal torus of
    SL(n, C), so their product must be exactly 1.
    """
    zs = [as_scalar(z) for z in zs]
    prod = Scalar(1)
    for z in zs:
        prod = prod * z
    if prod != 1:
        raise ValueError(f"torus point must have product 1, got {prod}")
    # coefficients of prod (t + z_i): e_k accumulates
    e = [Scalar(1)]
    for z in zs:
        e = [Scalar(1)] + [e[k] + e[k - 1] * z if k < len(e) else e[k - 1] * z for k in range(1, len(e) + 1)]
    return e[1:len(zs)]


def gram(vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    return [[_dot(u, v) for v in vectors] for u in vectors]


def conjugate_by(g, m):
    """``g m g^T``."""
    return matmul(matmul(g, m), transpose(g))


def rotation_3_4_5(s: int) -> list[list[Fraction]]:
    """The rational rotation ``[[3/5, 4/5], [-4/5, 3/5]]`` in the first two coordinates."""
    if s < 2:
        raise ValueError("rotation needs s >= 2")
    g = [[Fraction(int(i == j)) for j in range(s)] for i in range(s)]
    g[0][0], g[0][1], g[1][0], g[1][1] = Fraction(3, 5), Fraction(4, 5), Fraction(-4, 5), Fraction(3, 5)
    return g


def orthogonal_generators(s: int) -> list[list[list[Fraction]]]:
    """A finite generating set of rational orthogonal matrices.

    Adjacent transpositions and one sign flip generate the signed
    permutations; the 3-4-5 rotation has infinite order.
    """
    gens = [signed_permutation(range(s), [-1] + [1] * (s - 1))]
    for i in range(s - 1):
        perm = list(range(s))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(signed_permutation(perm, [1] * s))
    if s >= 2:
        gens.append(rotation_3_4_5(s))
    return gens


def pairs(n: int):
    return combinations(range(n), 2)
