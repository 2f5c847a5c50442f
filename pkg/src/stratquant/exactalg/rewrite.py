"""Rewrite rules ``leading monomial -> lower terms`` for quotient rings."""

from __future__ import annotations

from typing import Sequence

from .poly import Poly, grlex_key

__all__ = ["RewriteSystem", "RewriteOrderError"]


class RewriteOrderError(ValueError):
    """A rule does not strictly decrease the term order."""


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


class RewriteSystem:
    """Ordered list of rules ``m -> replacement`` over a fixed variable tuple.

    Every term of ``replacement`` must be grlex-smaller than ``m``; this is
    checked at construction and is what guarantees termination, since grlex
    is a well-order compatible with multiplication.

    Confluence is not checked here.  The relation ideals used in this package
    are principal, and a single generator is always a Groebner basis, so the
    normal form is unique for them.
    """

    def __init__(self, variables: Sequence[str], rules: Sequence[tuple[tuple[int, ...], Poly]] = ()):
        self.variables = tuple(variables)
        checked = []
        for lead, repl in rules:
            lead = tuple(lead)
            if len(lead) != len(self.variables):
                raise ValueError(f"leading monomial {lead} does not match variables")
            repl = repl.with_variables(self.variables)
            for exp in repl.terms:
                if grlex_key(exp) >= grlex_key(lead):
                    raise RewriteOrderError(
                        f"rule {Poly.monomial(lead, self.variables)} -> {repl} does not decrease the term order"
                    )
            checked.append((lead, repl))
        self.rules: tuple[tuple[tuple[int, ...], Poly], ...] = tuple(checked)
        self._relations: tuple[Poly, ...] | None = None

    @classmethod
    def from_relations(cls, variables: Sequence[str], relations: Sequence[Poly],
                       leads: Sequence[Sequence[int]] | None = None) -> RewriteSystem:
        """Orient each relation ``R = 0`` into a rule.

        By default the grlex-leading monomial of ``R`` is used; ``leads`` may
        name another monomial of ``R``, which must still dominate the rest.
        """
        variables = tuple(variables)
        rules = []
        for k, rel in enumerate(relations):
            rel = rel.with_variables(variables)
            if leads is None or leads[k] is None:
                lead, lc = rel.leading_term()
            else:
                lead = tuple(leads[k])
                lc = rel.coefficient(lead)
                if not lc:
                    raise ValueError(f"{Poly.monomial(lead, variables)} is not a term of {rel}")
            rest = rel - Poly.monomial(lead, variables, lc)
            rules.append((lead, (-rest) / lc))
        return cls(variables, rules)

    @classmethod
    def empty(cls, variables: Sequence[str]) -> RewriteSystem:
        return cls(variables, ())

    @property
    def relations(self) -> tuple[Poly, ...]:
        """The relations ``m - replacement`` (each generates part of the ideal)."""
        if self._relations is None:
            self._relations = tuple(Poly.monomial(lead, self.variables) - repl for lead, repl in self.rules)
        return self._relations

    def __len__(self):
        return len(self.rules)

    def normal_form(self, p: Poly) -> Poly:
        if not self.rules:
            return p
        vs = self.variables
        if p.variables != vs:
            p = p.with_variables(vs)
        terms = dict(p.terms)
        done: dict = {}
        while terms:
            # always rewrite the largest remaining term: it can only create smaller ones
            exp = max(terms, key=grlex_key)
            c = terms.pop(exp)
            for lead, repl in self.rules:
                if _divides(lead, exp):
                    quot = tuple(a - b for a, b in zip(exp, lead))
                    for rexp, rc in repl.terms.items():
                        e = tuple(a + b for a, b in zip(quot, rexp))
                        v = terms.get(e)
                        v = c * rc if v is None else v + c * rc
                        if v:
                            terms[e] = v
                        else:
                            terms.pop(e, None)
                    break
            else:
                done[exp] = c
        return Poly._make(vs, done)

    def is_reduced(self, p: Poly) -> bool:
        p = p.with_variables(self.variables)
        return not any(_divides(lead, exp) for exp in p.terms for lead, _ in self.rules)

    def __repr__(self):
        rules = ", ".join(f"{Poly.monomial(l, self.variables)} -> {r}" for l, r in self.rules)
        return f"RewriteSystem([{rules}])"


def normal_form(p: Poly, rs: RewriteSystem) -> Poly:
    return rs.normal_form(p)
