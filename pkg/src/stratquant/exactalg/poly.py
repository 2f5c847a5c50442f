"""Sparse multivariate polynomials over Q[i] with named variables.

Terms are kept in a dict ``exponent tuple -> Scalar`` with no zero
coefficients, so two polynomials over the same variable tuple are equal iff
their dicts are equal.  The global term order is graded lexicographic with
ties broken by the order of ``variables``.
"""

from __future__ import annotations

import json
import re
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .scalar import Scalar, as_scalar, format_rational, parse_rational

__all__ = ["Poly", "grlex_key", "monomials_of_degree", "align"]


def grlex_key(exp: tuple[int, ...]) -> tuple:
    return (sum(exp), exp)


def monomials_of_degree(nvars: int, degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given total degree, descending grlex."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(nvars - 1, degree - first):
            out.append((first,) + rest)
    return out


def _merge_vars(a: tuple[str, ...], b: tuple[str, ...]) -> tuple[str, ...]:
    if a == b:
        return a
    seen = set(a)
    return a + tuple(v for v in b if v not in seen)


class Poly:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        n = len(variables)
        clean: dict[tuple[int, ...], Scalar] = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError(f"exponent {exp} does not match {n} variables")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = as_scalar(c)
            if c:
                clean[exp] = clean.get(exp, Scalar()) + c
                if not clean[exp]:
                    del clean[exp]
        self.variables = variables
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, variables: tuple[str, ...], terms: dict) -> Poly:
        # trusted constructor: terms already clean
        obj = object.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    # --- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, variables: Sequence[str]) -> Poly:
        return cls._make(tuple(variables), {})

    @classmethod
    def const(cls, value, variables: Sequence[str]) -> Poly:
        variables = tuple(variables)
        c = as_scalar(value)
        return cls._make(variables, {(0,) * len(variables): c} if c else {})

    @classmethod
    def var(cls, name: str, variables: Sequence[str]) -> Poly:
        variables = tuple(variables)
        if name not in variables:
            raise KeyError(f"unknown variable {name!r}")
        exp = tuple(1 if v == name else 0 for v in variables)
        return cls._make(variables, {exp: Scalar(1)})

    @classmethod
    def gens(cls, variables: Sequence[str]) -> list[Poly]:
        return [cls.var(v, variables) for v in variables]

    @classmethod
    def monomial(cls, exp: Sequence[int], variables: Sequence[str], coeff=1) -> Poly:
        return cls(variables, {tuple(exp): coeff})

    # --- basic queries --------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.variables)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def constant_term(self) -> Scalar:
        return self.terms.get((0,) * self.nvars, Scalar())

    def coefficient(self, exp: Sequence[int]) -> Scalar:
        return self.terms.get(tuple(exp), Scalar())

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def degree_in(self, name: str) -> int:
        i = self.variables.index(name)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def sorted_terms(self) -> list[tuple[tuple[int, ...], Scalar]]:
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[tuple[int, ...], Scalar]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def free_variables(self) -> set[str]:
        used = set()
        for exp in self.terms:
            used.update(v for v, e in zip(self.variables, exp) if e)
        return used

    # --- variable management --------------------------------------------
    def with_variables(self, variables: Sequence[str]) -> Poly:
        """Re-express over ``variables``, which must contain every used one."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        index = {v: i for i, v in enumerate(variables)}
        missing = self.free_variables() - index.keys()
        if missing:
            raise KeyError(f"variables {sorted(missing)} not in {variables}")
        n = len(variables)
        pos = [index.get(v) for v in self.variables]
        out = {}
        for exp, c in self.terms.items():
            new = [0] * n
            for p, e in zip(pos, exp):
                if e:
                    new[p] = e
            out[tuple(new)] = c
        return Poly._make(variables, out)

    def _coerce(self, other) -> tuple[Poly, Poly] | None:
        if isinstance(other, Poly):
            if other.variables == self.variables:
                return self, other
            vs = _merge_vars(self.variables, other.variables)
            return self.with_variables(vs), other.with_variables(vs)
        if isinstance(other, (Rational, Scalar)):
            return self, Poly.const(other, self.variables)
        return None

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        if len(a.terms) < len(b.terms):
            a, b = b, a
        out = dict(a.terms)
        for exp, c in b.terms.items():
            v = out.get(exp)
            if v is None:
                out[exp] = c
            else:
                v = v + c
                if v:
                    out[exp] = v
                else:
                    del out[exp]
        return Poly._make(a.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return b + (-a)

    def scale(self, c) -> Poly:
        c = as_scalar(c)
        if not c:
            return Poly.zero(self.variables)
        return Poly._make(self.variables, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Rational, Scalar)):
            return self.scale(other)
        pair = self._coerce(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        out: dict = {}
        get = out.get
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(map(int.__add__, e1, e2))
                v = get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        return Poly._make(a.variables, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Poly.const(1, self.variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (Rational, Scalar)):
            return self.scale(as_scalar(other).inverse())
        return NotImplemented

    def conjugate(self) -> Poly:
        """Conjugate the coefficients (variables are treated as formal)."""
        return Poly._make(self.variables, {e: c.conjugate() for e, c in self.terms.items()})

    # --- calculus and substitution --------------------------------------
    def differentiate(self, name: str) -> Poly:
        if name not in self.variables:
            raise KeyError(f"unknown variable {name!r}")
        i = self.variables.index(name)
        out = {}
        for exp, c in self.terms.items():
            e = exp[i]
            if e:
                new = exp[:i] + (e - 1,) + exp[i + 1:]
                out[new] = c * e
        return Poly._make(self.variables, out)

    def gradient(self) -> list[Poly]:
        return [self.differentiate(v) for v in self.variables]

    def substitute(self, mapping: Mapping[str, object], variables: Sequence[str] | None = None) -> Poly:
        """Replace variables by polynomials (or scalars).

        Unmapped variables stay themselves.  The result lives over
        ``variables`` if given, else over the union of the images' variables
        and the unmapped ones.
        """
        images: dict[str, Poly] = {}
        for name, val in mapping.items():
            if name not in self.variables:
                raise KeyError(f"unknown variable {name!r}")
            if isinstance(val, Poly):
                images[name] = val
        if variables is None:
            vs: tuple[str, ...] = tuple(v for v in self.variables if v not in mapping)
            for p in images.values():
                vs = _merge_vars(vs, p.variables)
        else:
            vs = tuple(variables)
        img = []
        for v in self.variables:
            if v in mapping:
                val = mapping[v]
                img.append(val.with_variables(vs) if isinstance(val, Poly) else Poly.const(val, vs))
            else:
                img.append(Poly.var(v, vs))
        # cache powers per variable
        powers: list[dict[int, Poly]] = [{0: Poly.const(1, vs), 1: p} for p in img]

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * img[i]
            return cache[e]

        total = Poly.zero(vs)
        for exp, c in self.terms.items():
            term = Poly.const(c, vs)
            for i, e in enumerate(exp):
                if e:
                    term = term * power(i, e)
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, object]) -> Scalar:
        values = [as_scalar(point[v]) for v in self.variables]
        total = Scalar()
        for exp, c in self.terms.items():
            t = c
            for x, e in zip(values, exp):
                if e:
                    t = t * x ** e
            total = total + t
        return total

    # --- equality -------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.variables == self.variables:
                return self.terms == other.terms
            vs = _merge_vars(self.variables, other.variables)
            return self.with_variables(vs).terms == other.with_variables(vs).terms
        if isinstance(other, (Rational, Scalar)):
            return self.terms == Poly.const(other, self.variables).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            used = tuple(sorted(self.free_variables()))
            p = self.with_variables(used) if used != self.variables else self
            self._hash = hash(frozenset(p.terms.items()) | {used})
        return self._hash

    def __repr__(self):
        return f"Poly({self.to_text()!r}, vars={list(self.variables)})"

    def __str__(self):
        return self.to_text()

    # --- serialization --------------------------------------------------
    def to_text(self) -> str:
        if not self.terms:
            return "0"
        parts: list[str] = []
        for exp, c in self.sorted_terms():
            factors = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exp) if e]
            if c.is_real():
                neg = c.re < 0
                mag = format_rational(abs(c.re))
                if factors and mag == "1":
                    body = "*".join(factors)
                else:
                    body = "*".join([mag] + factors)
                sign = "-" if neg else "+"
            else:
                body = "*".join([c.to_text()] + factors)
                sign = "+"
            if not parts:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    @classmethod
    def from_text(cls, text: str, variables: Sequence[str]) -> Poly:
        return _parse(text, tuple(variables))

    def to_json_obj(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [
                {"exp": list(exp), "re": format_rational(c.re), "im": format_rational(c.im)}
                for exp, c in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> Poly:
        terms = {}
        for t in obj["terms"]:
            exp = tuple(int(e) for e in t["exp"])
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp} in JSON polynomial")
            terms[exp] = Scalar(parse_rational(t["re"]), parse_rational(t.get("im", "0")))
        return cls(obj["vars"], terms)

    @classmethod
    def from_json(cls, text: str) -> Poly:
        return cls.from_json_obj(json.loads(text))


_TOKEN = re.compile(
    r"\s*(?:(?P<cplx>\([^()]*\))|(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>[-+*^]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse polynomial text at {text[pos:]!r}")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


def _parse(text: str, variables: tuple[str, ...]) -> Poly:
    tokens = _tokenize(text)
    total = Poly.zero(variables)
    i = 0
    sign = 1
    if not tokens:
        raise ValueError("empty polynomial text")
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
        coeff = Scalar(sign)
        exp = [0] * len(variables)
        expect_factor = True
        while i < len(tokens) and expect_factor:
            kind, val = tokens[i]
            if kind == "num":
                coeff = coeff * parse_rational(val)
                i += 1
            elif kind == "cplx":
                coeff = coeff * Scalar.from_text(val)
                i += 1
            elif kind == "name":
                if val not in variables:
                    raise KeyError(f"unknown variable {val!r}")
                e = 1
                i += 1
                if i < len(tokens) and tokens[i] == ("op", "^"):
                    e = int(tokens[i + 1][1])
                    i += 2
                exp[variables.index(val)] += e
            else:
                raise ValueError(f"unexpected token {val!r}")
            if i < len(tokens) and tokens[i] == ("op", "*"):
                i += 1
            else:
                expect_factor = False
        total = total + Poly(variables, {tuple(exp): coeff})
        sign = 1
    return total


def align(polys: Iterable[Poly]) -> list[Poly]:
    """Bring polynomials onto one common variable tuple."""
    polys = list(polys)
    vs: tuple[str, ...] = ()
    for p in polys:
        vs = _merge_vars(vs, p.variables)
    return [p.with_variables(vs) for p in polys]
