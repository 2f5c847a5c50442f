"""Finitely presented Poisson algebras and the Lie-Poisson structure on sp(l, R).

A presented algebra is a polynomial ring in named generators, a bracket
table on generator pairs and a relation ideal given by rewrite rules.  The
bracket of arbitrary polynomials is the bi-derivation extension of the
table,

    {f, g} = sum_{i != j} (df/dg_i) (dg/dg_j) {g_i, g_j},

reduced to normal form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from itertools import combinations
from typing import Mapping, Sequence

from .exactalg import Poly, RewriteSystem, Scalar
from .liealg import MatrixLieAlgebra, sp_algebra

__all__ = [
    "InvalidPoissonAlgebra",
    "IdealVerdict",
    "PresentedPoissonAlgebra",
    "LiePoissonSpace",
    "bracket",
    "jacobiator",
    "is_poisson_ideal",
    "lie_poisson_bracket",
    "semicone",
    "adjoint_quotient",
    "flat_algebra",
    "load_descriptor",
]


class InvalidPoissonAlgebra(ValueError):
    def __init__(self, message: str, witness: Poly | None = None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class IdealVerdict:
    passed: bool
    generator: str | None = None
    relation: Poly | None = None
    witness: Poly | None = None

    def __bool__(self):
        return self.passed


class PresentedPoissonAlgebra:
    def __init__(
        self,
        generators: Sequence[str],
        table: Mapping[tuple[str, str], Poly],
        relations: RewriteSystem | None = None,
        *,
        name: str = "",
        check: bool = True,
    ):
        self.generators = tuple(generators)
        self.name = name
        self.relations = relations if relations is not None else RewriteSystem.empty(self.generators)
        if self.relations.variables != self.generators:
            raise ValueError("relations must be over the generator variables")
        index = {g: i for i, g in enumerate(self.generators)}
        n = len(self.generators)
        zero = Poly.zero(self.generators)
        full = [[zero] * n for _ in range(n)]
        for (a, b), val in table.items():
            if a not in index or b not in index:
                raise KeyError(f"bracket entry ({a}, {b}) uses an unknown generator")
            if a == b:
                if self.relations.normal_form(val.with_variables(self.generators)):
                    raise InvalidPoissonAlgebra(f"{{{a},{a}}} must vanish")
                continue
            val = self.relations.normal_form(val.with_variables(self.generators))
            i, j = index[a], index[b]
            if (b, a) in table:
                other = self.relations.normal_form(table[(b, a)].with_variables(self.generators))
                if other != -val:
                    raise InvalidPoissonAlgebra(f"bracket table is not antisymmetric at ({a}, {b})")
            full[i][j] = val
            full[j][i] = -val
        self._table = full
        self._index = index
        if check:
            self.validate()

    # --- construction helpers -------------------------------------------
    @classmethod
    def from_descriptor(cls, desc: Mapping, *, check: bool = True) -> PresentedPoissonAlgebra:
        gens = tuple(desc["generators"])
        table = {}
        for entry in desc.get("brackets", []):
            table[(entry["a"], entry["b"])] = Poly.from_text(entry["value"], gens)
        rels, leads = [], []
        for rel in desc.get("relations", []):
            if isinstance(rel, str):
                rels.append(Poly.from_text(rel, gens))
                leads.append(None)
            else:
                rels.append(Poly.from_text(rel["relation"], gens))
                lead = rel.get("lead")
                leads.append(None if lead is None else Poly.from_text(lead, gens).leading_term()[0])
        rs = RewriteSystem.from_relations(gens, rels, leads)
        return cls(gens, table, rs, name=desc.get("name", ""), check=check)

    def to_descriptor(self) -> dict:
        brackets = []
        for i, j in combinations(range(len(self.generators)), 2):
            val = self._table[i][j]
            if val:
                brackets.append({"a": self.generators[i], "b": self.generators[j], "value": val.to_text()})
        relations = [
            {"relation": rel.to_text(), "lead": Poly.monomial(lead, self.generators).to_text()}
            for rel, (lead, _) in zip(self.relations.relations, self.relations.rules)
        ]
        return {"name": self.name, "generators": list(self.generators), "brackets": brackets, "relations": relations}

    def perturbed(self, a: str, b: str, delta: Poly) -> PresentedPoissonAlgebra:
        """Copy with ``{a, b}`` shifted by ``delta``; not validated."""
        table = self.table_dict()
        key = (a, b) if (a, b) in table else (b, a)
        sign = 1 if key == (a, b) else -1
        table[key] = table.get(key, Poly.zero(self.generators)) + delta.with_variables(self.generators) * sign
        return PresentedPoissonAlgebra(self.generators, table, self.relations,
                                       name=f"{self.name}*perturbed", check=False)

    def table_dict(self) -> dict[tuple[str, str], Poly]:
        out = {}
        for i, j in combinations(range(len(self.generators)), 2):
            out[(self.generators[i], self.generators[j])] = self._table[i][j]
        return out

    # --- algebra --------------------------------------------------------
    @property
    def variables(self) -> tuple[str, ...]:
        return self.generators

    def gen(self, name: str) -> Poly:
        return Poly.var(name, self.generators)

    def gens(self) -> list[Poly]:
        return [self.gen(g) for g in self.generators]

    def const(self, c) -> Poly:
        return Poly.const(c, self.generators)

    def reduce(self, p: Poly) -> Poly:
        return self.relations.normal_form(self.coerce(p))

    def coerce(self, p) -> Poly:
        if isinstance(p, Poly):
            if p.variables != self.generators:
                unknown = p.free_variables() - set(self.generators)
                if unknown:
                    raise KeyError(f"unknown variables {sorted(unknown)} for algebra {self.name or self.generators}")
                p = p.with_variables(self.generators)
            return p
        return Poly.const(p, self.generators)

    def table(self, a: str, b: str) -> Poly:
        return self._table[self._index[a]][self._index[b]]

    def bracket(self, f, g) -> Poly:
        f, g = self.coerce(f), self.coerce(g)
        df = [f.differentiate(v) for v in self.generators]
        dg = [g.differentiate(v) for v in self.generators]
        total = Poly.zero(self.generators)
        n = len(self.generators)
        for i in range(n):
            if not df[i]:
                continue
            for j in range(n):
                if i == j or not dg[j]:
                    continue
                entry = self._table[i][j]
                if entry:
                    total = total + df[i] * dg[j] * entry
        return self.relations.normal_form(total)

    def hamiltonian(self, u) -> callable:
        """``X_u = {u, .}`` as a function on polynomials."""
        u = self.coerce(u)
        return lambda f: self.bracket(u, f)

    def jacobiator(self, f, g, h) -> Poly:
        b = self.bracket
        return self.relations.normal_form(b(f, b(g, h)) + b(g, b(h, f)) + b(h, b(f, g)))

    def is_poisson_ideal(self) -> IdealVerdict:
        for rel in self.relations.relations:
            for g in self.generators:
                w = self.bracket(self.gen(g), rel)
                if w:
                    return IdealVerdict(False, g, rel, w)
        return IdealVerdict(True)

    def jacobi_witness(self) -> tuple[tuple[str, str, str], Poly] | None:
        gens = self.gens()
        for i, j, k in combinations(range(len(gens)), 3):
            w = self.jacobiator(gens[i], gens[j], gens[k])
            if w:
                return (self.generators[i], self.generators[j], self.generators[k]), w
        return None

    def validate(self) -> None:
        verdict = self.is_poisson_ideal()
        if not verdict:
            raise InvalidPoissonAlgebra(
                f"relation {verdict.relation} is not a Poisson ideal: {{{verdict.generator}, R}} = {verdict.witness}",
                verdict.witness,
            )
        bad = self.jacobi_witness()
        if bad is not None:
            raise InvalidPoissonAlgebra(f"Jacobi fails on {bad[0]}: {bad[1]}", bad[1])

    def __repr__(self):
        return f"PresentedPoissonAlgebra({self.name or '?'}, generators={list(self.generators)})"


def bracket(f: Poly, g: Poly, A: PresentedPoissonAlgebra) -> Poly:
    return A.bracket(f, g)


def jacobiator(f: Poly, g: Poly, h: Poly, A: PresentedPoissonAlgebra) -> Poly:
    return A.jacobiator(f, g, h)


def is_poisson_ideal(A: PresentedPoissonAlgebra) -> IdealVerdict:
    return A.is_poisson_ideal()


# --- built-in algebras ------------------------------------------------------

def load_descriptor(name: str) -> dict:
    text = resources.files("stratquant.data").joinpath(f"{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def semicone(*, check: bool = True) -> PresentedPoissonAlgebra:
    """Reduced algebra of one particle at angular momentum zero.

    Generators x, y, r with ``x^2 + y^2 = r^2``; the rewrite rule is
    ``r^2 -> x^2 + y^2``, so normal forms are at most linear in r.
    """
    return PresentedPoissonAlgebra.from_descriptor(load_descriptor("semicone"), check=check)


def adjoint_quotient(*, check: bool = True) -> PresentedPoissonAlgebra:
    """The SL(2, C) adjoint quotient in the variables X, Y, tau.

    ``{X, tau} = 2(1 - tau) Y`` and ``{Y, tau} = 2 X tau`` are the unique
    quadratic completions of ``{X, Y}`` for which the relation generates a
    Poisson ideal.
    """
    return PresentedPoissonAlgebra.from_descriptor(load_descriptor("adjoint_quotient"), check=check)


def flat_algebra(n: int) -> PresentedPoissonAlgebra:
    """R^{2n} with Darboux coordinates q_i, p_i and ``{q_i, p_i} = 1``."""
    qs = [f"q{i + 1}" for i in range(n)] if n > 1 else ["q"]
    ps = [f"p{i + 1}" for i in range(n)] if n > 1 else ["p"]
    gens = tuple(qs + ps)
    table = {(q, p): Poly.const(1, gens) for q, p in zip(qs, ps)}
    return PresentedPoissonAlgebra(gens, table, name=f"flat{2 * n}")


# --- Lie-Poisson ------------------------------------------------------------

class LiePoissonSpace:
    """Polynomial functions on sp(l, R) with the Lie-Poisson bracket.

    sp(l, R) is identified with its dual by ``a -> f_a``, ``f_a(x) = tr(a x) / 2``.
    The coordinate functions are ``f_{e_i}`` for the basis ``e_i`` and carry
    the basis labels as variable names, so ``{f_a, f_b} = f_{[a, b]}``.
    """

    def __init__(self, l: int):
        if l < 1:
            raise ValueError("l must be positive")
        self.l = l
        self.lie: MatrixLieAlgebra = sp_algebra(l)
        self.variables = self.lie.labels

    @property
    def basis(self):
        return self.lie.basis

    @property
    def structure_constants(self):
        return self.lie.structure_constants

    @cached_property
    def algebra(self) -> PresentedPoissonAlgebra:
        vs = self.variables
        c = self.structure_constants
        table = {}
        for i, j in combinations(range(len(vs)), 2):
            table[(vs[i], vs[j])] = Poly(vs, {
                tuple(1 if t == k else 0 for t in range(len(vs))): c[i][j][k]
                for k in range(len(vs)) if c[i][j][k]
            })
        return PresentedPoissonAlgebra(vs, table, name=f"lie_poisson_sp{self.l}", check=False)

    def linear_function(self, a) -> Poly:
        """``f_a`` in the coordinate functions."""
        coords = self.lie.coordinates(a)
        return Poly(self.variables, {
            tuple(1 if t == k else 0 for t in range(len(coords))): c for k, c in enumerate(coords) if c
        })

    def evaluate(self, f: Poly, x) -> Scalar:
        """Value of ``f`` at the point ``x`` of sp(l, R) (coordinates ``tr(e_i x) / 2``)."""
        from .exactalg.linalg import matmul, trace

        point = {v: trace(matmul(e, x)) / 2 for v, e in zip(self.variables, self.basis)}
        return f.evaluate(point)

    def bracket(self, f: Poly, g: Poly) -> Poly:
        for p in (f, g):
            if not p.free_variables() <= set(self.variables):
                raise ValueError(f"{p} is not a function on sp({self.l})")
        return self.algebra.bracket(f, g)


def lie_poisson_bracket(f: Poly, g: Poly, S: LiePoissonSpace) -> Poly:
    return S.bracket(f, g)
