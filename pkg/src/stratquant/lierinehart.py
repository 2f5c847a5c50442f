"""The Lie-Rinehart algebra (A, D_A) of a Poisson algebra, its central
extension by A, prequantum modules and prequantization.

Formal differentials are A-combinations ``sum_i a_i dg_i`` of generator
differentials, modulo the A-submodule spanned by the differentials of the
relations.  Equality in D_A is decided by an exact membership test in that
submodule (see :meth:`LieRinehartAlgebra.is_zero`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exactalg import I, IncrementalEchelon, Poly, Scalar, monomials_of_degree
from .poisson import PresentedPoissonAlgebra

__all__ = [
    "LieRinehartAlgebra",
    "DiffElement",
    "ExtElement",
    "PrequantumModule",
    "NoPrequantumSign",
]


class LieRinehartAlgebra:
    """(A, D_A) for a presented Poisson algebra A."""

    def __init__(self, A: PresentedPoissonAlgebra, *, membership_slack: int = 1):
        self.A = A
        self.generators = A.generators
        self.slack = membership_slack
        # d of each relation, reduced
        self._relation_diffs = [
            tuple(A.reduce(rel.differentiate(g)) for g in self.generators) for rel in A.relations.relations
        ]
        self._echelons: dict[int, IncrementalEchelon] = {}

    # --- elements -------------------------------------------------------
    def element(self, coeffs) -> DiffElement:
        """From a dict ``generator -> coefficient`` or a full coefficient list."""
        if isinstance(coeffs, dict):
            unknown = set(coeffs) - set(self.generators)
            if unknown:
                raise KeyError(f"unknown generators {sorted(unknown)}")
            coeffs = [coeffs.get(g, 0) for g in self.generators]
        return DiffElement(self, tuple(self.A.reduce(self.A.coerce(c)) for c in coeffs))

    def zero(self) -> DiffElement:
        return self.element({})

    def d(self, u) -> DiffElement:
        u = self.A.reduce(self.A.coerce(u))
        return DiffElement(self, tuple(self.A.reduce(u.differentiate(g)) for g in self.generators))

    def dgen(self, g: str) -> DiffElement:
        return self.element({g: 1})

    def from_pairs(self, pairs: Iterable[tuple]) -> DiffElement:
        """``sum a du`` from pairs ``(a, u)``; ``u`` may be a generator name."""
        total = self.zero()
        for a, u in pairs:
            du = self.dgen(u) if isinstance(u, str) else self.d(u)
            total = total + du.scale(a)
        return total

    # --- structure maps -------------------------------------------------
    def pi_sharp(self, alpha: DiffElement, f) -> Poly:
        """``sum_i a_i {g_i, f}``: the derivation of A attached to ``alpha``."""
        f = self.A.coerce(f)
        total = Poly.zero(self.generators)
        for g, a in zip(self.generators, alpha.coeffs):
            if a:
                total = total + a * self.A.bracket(self.A.gen(g), f)
        return self.A.reduce(total)

    def pi(self, alpha: DiffElement, beta: DiffElement) -> Poly:
        """The Poisson 2-form, ``pi(du, dv) = {u, v}``."""
        total = Poly.zero(self.generators)
        for i, a in enumerate(alpha.coeffs):
            if not a:
                continue
            for j, b in enumerate(beta.coeffs):
                if b and i != j:
                    total = total + a * b * self.A.table(self.generators[i], self.generators[j])
        return self.A.reduce(total)

    def bracket(self, alpha: DiffElement, beta: DiffElement) -> DiffElement:
        """``[a du, b dv] = a{u,b} dv + b{a,v} du + ab d{u,v}``, extended bilinearly."""
        gens = self.generators
        out = [Poly.zero(gens) for _ in gens]
        # sum_j alpha(b_j) dg_j - sum_i beta(a_i) dg_i
        for j, b in enumerate(beta.coeffs):
            if b:
                out[j] = out[j] + self.pi_sharp(alpha, b)
        for i, a in enumerate(alpha.coeffs):
            if a:
                out[i] = out[i] - self.pi_sharp(beta, a)
        # sum_ij a_i b_j d{g_i, g_j}
        for i, a in enumerate(alpha.coeffs):
            if not a:
                continue
            for j, b in enumerate(beta.coeffs):
                if not b or i == j:
                    continue
                entry = self.A.table(gens[i], gens[j])
                if entry:
                    ab = a * b
                    for k, g in enumerate(gens):
                        dk = entry.differentiate(g)
                        if dk:
                            out[k] = out[k] + ab * dk
        return DiffElement(self, tuple(self.A.reduce(c) for c in out))

    # --- quotient by relation differentials -----------------------------
    def _echelon(self, degree: int) -> IncrementalEchelon:
        ech = self._echelons.get(degree)
        if ech is None:
            ech = IncrementalEchelon()
            rs = self.A.relations
            n = len(self.generators)
            for dR in self._relation_diffs:
                for deg in range(degree + 1):
                    for exp in monomials_of_degree(n, deg):
                        m = Poly.monomial(exp, self.generators)
                        if not rs.is_reduced(m):
                            continue
                        vec = {}
                        for k, c in enumerate(dR):
                            for e, x in self.A.reduce(m * c).terms.items():
                                vec[(k,) + e] = x
                        if vec:
                            ech.add(vec)
            self._echelons[degree] = ech
        return ech

    def is_zero(self, alpha: DiffElement) -> bool:
        """Exact membership of ``alpha`` in ``A dR_1 + ... + A dR_r``.

        The multipliers are searched among normal-form polynomials of degree
        at most ``max deg(alpha) + slack``.  For homogeneous relations (the
        semicone) this bound is always sufficient.
        """
        if all(not c for c in alpha.coeffs):
            return True
        if not self._relation_diffs:
            return False
        deg = max(c.degree() for c in alpha.coeffs) + self.slack
        vec = {}
        for k, c in enumerate(alpha.coeffs):
            for e, x in c.terms.items():
                vec[(k,) + e] = x
        return self._echelon(deg).contains(vec)

    # --- central extension ----------------------------------------------
    def ext(self, a, alpha: DiffElement | None = None) -> ExtElement:
        a = self.A.reduce(self.A.coerce(a))
        return ExtElement(self, a, alpha if alpha is not None else self.zero())

    def ext_pair(self, a, u) -> ExtElement:
        """The generating element ``(a, du)``."""
        return self.ext(a, self.d(u))

    def ext_bracket(self, X: ExtElement, Y: ExtElement) -> ExtElement:
        """``[(a, alpha), (b, beta)] = (alpha(b) - beta(a) - pi(alpha, beta), [alpha, beta])``.

        On generating pairs this is ``({u,b} + {a,v} - {u,v}, d{u,v})``.
        """
        scalar = self.pi_sharp(X.diff, Y.scalar) - self.pi_sharp(Y.diff, X.scalar) - self.pi(X.diff, Y.diff)
        return ExtElement(self, self.A.reduce(scalar), self.bracket(X.diff, Y.diff))


@dataclass(frozen=True, eq=False)
class DiffElement:
    lr: LieRinehartAlgebra
    coeffs: tuple[Poly, ...]

    def __add__(self, other: DiffElement) -> DiffElement:
        return DiffElement(self.lr, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: DiffElement) -> DiffElement:
        return DiffElement(self.lr, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> DiffElement:
        return DiffElement(self.lr, tuple(-a for a in self.coeffs))

    def scale(self, a) -> DiffElement:
        A = self.lr.A
        a = A.coerce(a)
        return DiffElement(self.lr, tuple(A.reduce(a * c) for c in self.coeffs))

    def __rmul__(self, a) -> DiffElement:
        return self.scale(a)

    def __call__(self, f) -> Poly:
        return self.lr.pi_sharp(self, f)

    def is_zero(self) -> bool:
        return self.lr.is_zero(self)

    def __eq__(self, other):
        if not isinstance(other, DiffElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def as_dict(self) -> dict[str, Poly]:
        return {g: c for g, c in zip(self.lr.generators, self.coeffs) if c}

    def __str__(self):
        parts = [f"({c})*d{g}" for g, c in self.as_dict().items()]
        return " + ".join(parts) if parts else "0"

    __repr__ = __str__


@dataclass(frozen=True, eq=False)
class ExtElement:
    lr: LieRinehartAlgebra
    scalar: Poly
    diff: DiffElement

    def __add__(self, other: ExtElement) -> ExtElement:
        return ExtElement(self.lr, self.scalar + other.scalar, self.diff + other.diff)

    def __sub__(self, other: ExtElement) -> ExtElement:
        return ExtElement(self.lr, self.scalar - other.scalar, self.diff - other.diff)

    def scale(self, a) -> ExtElement:
        A = self.lr.A
        a = A.coerce(a)
        return ExtElement(self.lr, A.reduce(a * self.scalar), self.diff.scale(a))

    def is_zero(self) -> bool:
        return not self.lr.A.reduce(self.scalar) and self.diff.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        return f"({self.scalar}, {self.diff})"

    __repr__ = __str__


class NoPrequantumSign(ValueError):
    pass


def _probe_monomials(gens: Sequence[str], max_degree: int) -> list[Poly]:
    out = []
    for deg in range(max_degree + 1):
        for exp in monomials_of_degree(len(gens), deg):
            out.append(Poly.monomial(exp, gens))
    return out


class PrequantumModule:
    """Prequantum module on ``M = A (x) C`` for flat R^{2n}.

    ``chi(a, alpha) = i a + X_alpha + i eps theta(X_alpha)`` with the
    potential ``theta = sum_k p_k dq_k`` and ``X_alpha = pi_sharp(alpha)``.
    The sign ``eps`` is chosen at construction as the unique value in
    {+1, -1} for which ``chi`` is a representation of the extension.
    """

    def __init__(self, lr: LieRinehartAlgebra, potential: DiffElement | None = None, *,
                 sign: int | None = None, probe_degree: int = 2, validate: bool = True):
        self.lr = lr
        self.A = lr.A
        if potential is None:
            potential = self.standard_potential(lr)
        self.potential = potential
        if sign is None:
            good = [eps for eps in (1, -1)
                    if self._representation_defect(eps, probe_degree) is None]
            if len(good) != 1:
                raise NoPrequantumSign(f"expected exactly one valid sign, found {good}")
            sign = good[0]
        self.sign = sign
        if validate and sign != 0:
            bad = self._representation_defect(sign, probe_degree)
            if bad is not None:
                raise NoPrequantumSign(f"chi is not a representation: {bad}")
            self._check_central(probe_degree)

    @staticmethod
    def standard_potential(lr: LieRinehartAlgebra) -> DiffElement:
        gens = lr.generators
        n = len(gens) // 2
        qs, ps = gens[:n], gens[n:]
        return lr.element({q: lr.A.gen(p) for q, p in zip(qs, ps)})

    @classmethod
    def without_potential(cls, lr: LieRinehartAlgebra) -> PrequantumModule:
        """The naive Hamiltonian action ``chi(0, du) = X_u``; not a prequantum module."""
        return cls(lr, lr.zero(), sign=0, validate=False)

    # --- the module structure -------------------------------------------
    def theta_of(self, alpha: DiffElement) -> Poly:
        """``theta(X_alpha) = sum_k theta_k X_alpha(g_k)``."""
        total = Poly.zero(self.lr.generators)
        for g, t in zip(self.lr.generators, self.potential.coeffs):
            if t:
                total = total + t * alpha(self.A.gen(g))
        return self.A.reduce(total)

    def chi(self, X: ExtElement, x: Poly) -> Poly:
        x = self.A.coerce(x)
        out = X.scalar * x * I + X.diff(x)
        if self.sign:
            out = out + self.theta_of(X.diff) * x * (I * self.sign)
        return self.A.reduce(out)

    def prequantize(self, a, x) -> Poly:
        """``a^(x) = (1/i) chi(0, da)(x) + a x``."""
        a = self.A.reduce(self.A.coerce(a))
        x = self.A.coerce(x)
        X = self.lr.ext(0, self.lr.d(a))
        return self.A.reduce(self.chi(X, x) * (-I) + a * x)

    def dirac_residual(self, a, b, probe) -> Poly:
        """``{a,b}^(probe) - i [a^, b^](probe)``."""
        ab = self.A.bracket(a, b)
        lhs = self.prequantize(ab, probe)
        comm = self.prequantize(a, self.prequantize(b, probe)) - self.prequantize(b, self.prequantize(a, probe))
        return self.A.reduce(lhs - comm * I)

    # --- validation -----------------------------------------------------
    def _chi_with(self, eps: int, X: ExtElement, x: Poly) -> Poly:
        saved = getattr(self, "sign", None)
        self.sign = eps
        try:
            return self.chi(X, x)
        finally:
            self.sign = saved

    def _representation_defect(self, eps: int, probe_degree: int):
        lr = self.lr
        gens = [lr.ext_pair(0, lr.A.gen(g)) for g in lr.generators]
        probes = _probe_monomials(lr.generators, probe_degree)
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                X, Y = gens[i], gens[j]
                Z = lr.ext_bracket(X, Y)
                for x in probes:
                    lhs = self._chi_with(eps, Z, x)
                    rhs = (self._chi_with(eps, X, self._chi_with(eps, Y, x))
                           - self._chi_with(eps, Y, self._chi_with(eps, X, x)))
                    if lhs != rhs:
                        return (lr.generators[i], lr.generators[j], x, lhs - rhs)
        return None

    def _check_central(self, probe_degree: int) -> None:
        lr = self.lr
        for g in lr.generators:
            a = lr.A.gen(g)
            for x in _probe_monomials(lr.generators, probe_degree):
                if self.chi(lr.ext(a), x) != a * x * I:
                    raise NoPrequantumSign("chi(a, 0) differs from i a Id")

    def representation_defect(self, X: ExtElement, Y: ExtElement, x) -> Poly:
        x = self.A.coerce(x)
        Z = self.lr.ext_bracket(X, Y)
        return self.A.reduce(self.chi(Z, x) - self.chi(X, self.chi(Y, x)) + self.chi(Y, self.chi(X, x)))
