"""Bargmann-Fock polynomials, O(s)-invariants and the costratified restriction maps.

Holomorphic coordinates are ``z_{j,a}`` for particle ``j = 1..l`` and space
index ``a = 1..s``.  O(s) acts on the space index, U(l) on the particle
index.  The invariants are generated by ``w_jk = z_j . z_k`` (complex
bilinear dot product over the space index), which realize the coordinates
on complex symmetric l x l matrices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial
from typing import Sequence

from .exactalg import I, IncrementalEchelon, Poly, Scalar, as_scalar, is_positive_definite, monomials_of_degree
from .repcount import section_dim, sym_coordinates

__all__ = [
    "FockPoly",
    "InvariantBasis",
    "BoundsExceeded",
    "DEFAULT_BOUNDS",
    "fock_variables",
    "w_variables",
    "bargmann_inner",
    "monomial_norm",
    "invariant_basis",
    "w_to_z",
    "is_invariant",
    "quantize_u",
    "euler",
    "costratified_restrict",
    "restrict_w",
    "gram",
    "delta_minor",
    "gl_action",
    "u_span",
    "act_orthogonal",
    "is_anti_hermitian",
    "unit_matrix",
    "weight_of_vector",
    "is_highest_weight",
    "delta_minor_w",
    "delta_monomial",
    "restriction_rank",
    "gram_is_positive_definite",
    "expected_dim",
]

DEFAULT_BOUNDS = {"s": 3, "l": 3, "k": 4}


class BoundsExceeded(ValueError):
    """A request beyond the configured desk-scale limits."""


def fock_variables(s: int, l: int) -> tuple[str, ...]:
    return tuple(f"z{j + 1}_{a + 1}" for j in range(l) for a in range(s))


def w_variables(l: int) -> tuple[str, ...]:
    return tuple(f"w{j + 1}_{k + 1}" for j, k in sym_coordinates(l))


@dataclass(frozen=True)
class FockPoly:
    """A holomorphic polynomial on ``C^{s l}``."""

    poly: Poly
    s: int
    l: int

    def __post_init__(self):
        vs = fock_variables(self.s, self.l)
        if self.poly.variables != vs:
            object.__setattr__(self, "poly", self.poly.with_variables(vs))

    @classmethod
    def zero(cls, s: int, l: int) -> FockPoly:
        return cls(Poly.zero(fock_variables(s, l)), s, l)

    @property
    def m(self) -> int:
        return self.s * self.l

    @property
    def variables(self) -> tuple[str, ...]:
        return self.poly.variables

    def degree(self) -> int:
        return self.poly.degree()

    def z(self, j: int, a: int) -> Poly:
        return Poly.var(f"z{j + 1}_{a + 1}", self.variables)

    def _same(self, other: FockPoly) -> None:
        if (self.s, self.l) != (other.s, other.l):
            raise ValueError(f"Fock spaces differ: {(self.s, self.l)} vs {(other.s, other.l)}")

    def __add__(self, other: FockPoly) -> FockPoly:
        self._same(other)
        return FockPoly(self.poly + other.poly, self.s, self.l)

    def __sub__(self, other: FockPoly) -> FockPoly:
        self._same(other)
        return FockPoly(self.poly - other.poly, self.s, self.l)

    def __mul__(self, other):
        if isinstance(other, FockPoly):
            self._same(other)
            return FockPoly(self.poly * other.poly, self.s, self.l)
        return FockPoly(self.poly * other, self.s, self.l)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.poly)

    def __eq__(self, other):
        if not isinstance(other, FockPoly):
            return NotImplemented
        return (self.s, self.l) == (other.s, other.l) and self.poly == other.poly

    def __hash__(self):
        return hash((self.s, self.l, self.poly))

    def __str__(self):
        return str(self.poly)


# --- inner product ------------------------------------------------------------

def monomial_norm(exp: Sequence[int]) -> int:
    """``<z^a, z^a> = 2^{|a|} a!`` under the Gaussian weight ``exp(-|z|^2 / 2)``."""
    out = 1
    for e in exp:
        out *= (2 ** e) * factorial(e)
    return out


def bargmann_inner(f: FockPoly | Poly, g: FockPoly | Poly) -> Scalar:
    """Sesquilinear (linear in ``f``, conjugate-linear in ``g``) Fock inner product."""
    pf = f.poly if isinstance(f, FockPoly) else f
    pg = g.poly if isinstance(g, FockPoly) else g
    if pf.variables != pg.variables:
        raise ValueError("inner product needs polynomials over the same variables")
    total = Scalar()
    small, big = (pf.terms, pg.terms) if len(pf.terms) <= len(pg.terms) else (pg.terms, pf.terms)
    for exp in small:
        if exp in big:
            total = total + pf.terms[exp] * pg.terms[exp].conjugate() * monomial_norm(exp)
    return total


# --- invariants -----------------------------------------------------------------

def _check_bounds(bounds: dict | None, **values) -> None:
    limits = DEFAULT_BOUNDS if bounds is None else bounds
    for name, v in values.items():
        if v < 1 and name != "k":
            raise ValueError(f"{name} must be positive")
        if v < 0:
            raise ValueError(f"{name} must be nonnegative")
        if limits is not False and v > limits[name]:
            raise BoundsExceeded(f"{name}={v} exceeds the limit {limits[name]}")


@lru_cache(maxsize=None)
def _w_images(s: int, l: int) -> dict[str, Poly]:
    vs = fock_variables(s, l)
    out = {}
    for j, k in sym_coordinates(l):
        p = Poly.zero(vs)
        for a in range(s):
            p = p + Poly.var(f"z{j + 1}_{a + 1}", vs) * Poly.var(f"z{k + 1}_{a + 1}", vs)
        out[f"w{j + 1}_{k + 1}"] = p
    return out


def w_to_z(wpoly: Poly, s: int, l: int) -> FockPoly:
    """Substitute ``w_jk = sum_a z_{j,a} z_{k,a}``."""
    vs = fock_variables(s, l)
    wpoly = wpoly.with_variables(w_variables(l))
    return FockPoly(wpoly.substitute(_w_images(s, l), vs), s, l)


@dataclass(frozen=True)
class InvariantBasis:
    s: int
    l: int
    k: int
    elements: tuple[FockPoly, ...]
    w_reps: tuple[Poly, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]


def _w_monomial_images(s: int, l: int, k: int) -> list[tuple[tuple[int, ...], FockPoly]]:
    wv = w_variables(l)
    imgs = _w_images(s, l)
    vs = fock_variables(s, l)
    cache: dict[tuple[int, ...], Poly] = {(0,) * len(wv): Poly.const(1, vs)}

    def image(exp: tuple[int, ...]) -> Poly:
        if exp not in cache:
            i = next(t for t, e in enumerate(exp) if e)
            lower = exp[:i] + (exp[i] - 1,) + exp[i + 1:]
            cache[exp] = image(lower) * imgs[wv[i]]
        return cache[exp]

    return [(exp, FockPoly(image(exp), s, l)) for exp in monomials_of_degree(len(wv), k)]


def invariant_basis(s: int, l: int, k: int, *, bounds: dict | None = None) -> InvariantBasis:
    """Maximal independent subset of the degree-k w-monomials, in grlex order.

    Its size is the dimension of the degree-k part of the coordinate ring of
    the rank <= s symmetric matrices.
    """
    _check_bounds(bounds, s=s, l=l, k=k)
    wv = w_variables(l)
    ech = IncrementalEchelon()
    elements, reps = [], []
    for exp, f in _w_monomial_images(s, l, k):
        if ech.add(f.poly.terms):
            elements.append(f)
            reps.append(Poly.monomial(exp, wv))
    return InvariantBasis(s, l, k, tuple(elements), tuple(reps))


def act_orthogonal(g: Sequence[Sequence], f: FockPoly) -> FockPoly:
    """``f(g^{-1} z)`` evaluated as ``f(g^T z)`` for orthogonal g (space index)."""
    vs = f.variables
    s = f.s
    mapping = {}
    for j in range(f.l):
        for a in range(s):
            img = Poly.zero(vs)
            for b in range(s):
                c = Fraction(g[b][a])
                if c:
                    img = img + Poly.var(f"z{j + 1}_{b + 1}", vs) * c
            mapping[f"z{j + 1}_{a + 1}"] = img
    return FockPoly(f.poly.substitute(mapping, vs), f.s, f.l)


def is_invariant(f: FockPoly, generators: Sequence) -> bool:
    return all(act_orthogonal(g, f) == f for g in generators)


# --- quantized u(l) observables ------------------------------------------------------

def gl_action(a: Sequence[Sequence], f: FockPoly) -> FockPoly:
    """The derivation ``D_a = sum_{j,k,c} a_jk z_{k,c} d/dz_{j,c}``.

    This is the infinitesimal action of ``a`` on the particle index; it is
    an anti-homomorphism, ``[D_a, D_b] = D_{[b, a]}``.
    """
    l, s = f.l, f.s
    if len(a) != l or any(len(row) != l for row in a):
        raise ValueError(f"expected an {l} x {l} matrix")
    vs = f.variables
    out = Poly.zero(vs)
    for j in range(l):
        for c in range(s):
            dj = f.poly.differentiate(f"z{j + 1}_{c + 1}")
            if not dj:
                continue
            for k in range(l):
                ajk = as_scalar(a[j][k])
                if ajk:
                    out = out + dj * Poly.var(f"z{k + 1}_{c + 1}", vs) * ajk
    return FockPoly(out, s, l)


def is_anti_hermitian(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return all(as_scalar(a[j][k]) == -as_scalar(a[k][j]).conjugate() for j in range(n) for k in range(n))


def quantize_u(a: Sequence[Sequence], f: FockPoly) -> FockPoly:
    """Quantized observable of ``a`` in u(l): the operator ``i D_a``.

    With this convention ``[a, b]^ = i [a^, b^]`` and the energy, attached to
    ``a = -i Id``, quantizes to the Euler operator ``sum z d/dz`` with no
    ordering constant.
    """
    if not is_anti_hermitian(a):
        raise ValueError("quantize_u needs an anti-Hermitian matrix")
    return gl_action(a, f) * I


def euler(f: FockPoly) -> FockPoly:
    l = f.l
    minus_i = [[Scalar(0, -1) if j == k else Scalar() for k in range(l)] for j in range(l)]
    return quantize_u(minus_i, f)


def unit_matrix(l: int, a: int, b: int) -> list[list[int]]:
    m = [[0] * l for _ in range(l)]
    m[a][b] = 1
    return m


def weight_of_vector(f: FockPoly) -> tuple[int, ...] | None:
    """The U(l) weight of ``f`` if it is a weight vector, else None."""
    lam = []
    for a in range(f.l):
        h = gl_action(unit_matrix(f.l, a, a), f)
        ratios = {h.poly.terms.get(e, Scalar()) / c for e, c in f.poly.terms.items()}
        if len(ratios) != 1 or len(h.poly.terms) > len(f.poly.terms):
            return None
        r = ratios.pop()
        if r.im or r.re.denominator != 1:
            return None
        lam.append(int(r.re))
    return tuple(lam)


def is_highest_weight(f: FockPoly) -> bool:
    """Annihilated by every raising operator ``z_b d/dz_a`` with ``b < a``."""
    return all(not gl_action(unit_matrix(f.l, a, b), f) for a in range(f.l) for b in range(a))


def u_span(vectors: Sequence[FockPoly]) -> list[FockPoly]:
    """Basis of the smallest gl(l)-stable subspace containing ``vectors``.

    Highest weight vectors only need lowering operators, but all of gl(l) is
    applied so the result is stable regardless of the input.
    """
    if not vectors:
        return []
    l = vectors[0].l
    ops = [unit_matrix(l, a, b) for a in range(l) for b in range(l) if a != b]
    ech = IncrementalEchelon()
    basis: list[FockPoly] = []
    queue = list(vectors)
    while queue:
        v = queue.pop()
        if v and ech.add(v.poly.terms):
            basis.append(v)
            queue.extend(gl_action(op, v) for op in ops)
    return basis


# --- determinants ------------------------------------------------------------------

def _perm_sign(p: Sequence[int]) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def delta_minor_w(j: int, l: int) -> Poly:
    """The leading principal j x j minor of the symmetric matrix ``(w_ab)``."""
    if not 1 <= j <= l:
        raise ValueError("minor size out of range")
    wv = w_variables(l)

    def w(a: int, b: int) -> Poly:
        a, b = min(a, b), max(a, b)
        return Poly.var(f"w{a + 1}_{b + 1}", wv)

    total = Poly.zero(wv)
    for perm in permutations(range(j)):
        term = Poly.const(_perm_sign(perm), wv)
        for a, b in enumerate(perm):
            term = term * w(a, b)
        total = total + term
    return total


def delta_minor(j: int, s: int, l: int) -> FockPoly:
    return w_to_z(delta_minor_w(j, l), s, l)


def delta_monomial(exponents: Sequence[int], s: int, l: int) -> FockPoly:
    wv = w_variables(l)
    p = Poly.const(1, wv)
    for j, e in enumerate(exponents):
        if e:
            p = p * delta_minor_w(j + 1, l) ** e
    return w_to_z(p, s, l)


# --- costratified structure ---------------------------------------------------------------

def costratified_restrict(f: FockPoly, s_new: int) -> FockPoly:
    """Restrict a level-s polynomial to level ``s_new < s``.

    The level-``s_new`` model sits inside the level-s one by setting the
    space components ``a > s_new`` to zero, which turns ``w_jk`` into the
    rank <= s_new parametrization ``t_j . t_k``.
    """
    if s_new < 1:
        raise ValueError("target level must be at least 1")
    if s_new >= f.s:
        raise ValueError("restriction goes to a strictly lower level")
    vs_new = fock_variables(s_new, f.l)
    mapping = {}
    for j in range(f.l):
        for a in range(f.s):
            name = f"z{j + 1}_{a + 1}"
            mapping[name] = Poly.var(name, vs_new) if a < s_new else Fraction(0)
    return FockPoly(f.poly.substitute(mapping, vs_new), s_new, f.l)


def restrict_w(wpoly: Poly, l: int, s_new: int) -> FockPoly:
    """The same restriction computed from a w-representative directly."""
    return w_to_z(wpoly, s_new, l)


def restriction_rank(basis: InvariantBasis, s_new: int) -> int:
    ech = IncrementalEchelon()
    for f in basis:
        ech.add(costratified_restrict(f, s_new).poly.terms)
    return ech.rank


def gram(basis: InvariantBasis | Sequence[FockPoly]) -> list[list[Scalar]]:
    elems = list(basis)
    return [[bargmann_inner(f, g) for g in elems] for f in elems]


def gram_is_positive_definite(basis: InvariantBasis | Sequence[FockPoly]) -> bool:
    return is_positive_definite(gram(basis))


def expected_dim(s: int, l: int, k: int) -> int:
    return section_dim(s, l, k)
