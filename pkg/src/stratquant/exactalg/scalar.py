"""Exact Gaussian rationals ``a + b i`` with ``a, b`` in Q."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Scalar", "as_scalar", "parse_rational", "format_rational"]


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class Scalar:
    """Immutable element of Q[i].

    Both parts are kept as :class:`fractions.Fraction`, which already
    normalizes to lowest terms with a positive denominator.  Arithmetic
    accepts ints and Fractions on either side.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("Scalar is immutable")

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction) -> Scalar:
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    # --- predicates -----------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Scalar):
            return Scalar._raw(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return Scalar._raw(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, Scalar):
            return Scalar._raw(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return Scalar._raw(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return Scalar._raw(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Scalar):
            a, b, c, d = self.re, self.im, other.re, other.im
            if not b and not d:
                return Scalar._raw(a * c, b)
            return Scalar._raw(a * c - b * d, a * d + b * c)
        if isinstance(other, Rational):
            return Scalar._raw(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self) -> Scalar:
        return Scalar._raw(self.re, -self.im)

    def norm2(self) -> Fraction:
        """``|z|**2`` as an exact rational."""
        return self.re * self.re + self.im * self.im

    def inverse(self) -> Scalar:
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("inverse of zero Scalar")
        return Scalar._raw(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.inverse()
        if isinstance(other, Rational):
            if not other:
                raise ZeroDivisionError("division of Scalar by zero")
            return Scalar._raw(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return Scalar(other) * self.inverse()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar._raw(Fraction(1), Fraction(0))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # --- comparison / hashing -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return self.to_text()

    # --- text form ------------------------------------------------------
    def to_text(self) -> str:
        """``p/q`` for reals, ``(a+bi)``, ``(bi)`` otherwise."""
        if not self.im:
            return format_rational(self.re)
        im = self.im
        mag = format_rational(abs(im))
        im_txt = ("" if mag == "1" else mag) + "i"
        if not self.re:
            return f"({'-' if im < 0 else ''}{im_txt})"
        sign = "-" if im < 0 else "+"
        return f"({format_rational(self.re)}{sign}{im_txt})"

    @classmethod
    def from_text(cls, text: str) -> Scalar:
        t = text.strip()
        if t.startswith("(") and t.endswith(")"):
            t = t[1:-1]
        if not t.endswith("i"):
            return cls(parse_rational(t))
        body = t[:-1]
        # split at the last sign that is not the leading one
        cut = max(body.rfind("+", 1), body.rfind("-", 1))
        if cut <= 0:
            re_txt, im_txt = "0", body
        else:
            re_txt, im_txt = body[:cut], body[cut:]
        if im_txt in ("", "+"):
            im = Fraction(1)
        elif im_txt == "-":
            im = Fraction(-1)
        else:
            im = parse_rational(im_txt)
        return cls(parse_rational(re_txt), im)


I = Scalar(0, 1)
ONE = Scalar(1)
ZERO = Scalar(0)


def as_scalar(value) -> Scalar:
    if isinstance(value, Scalar):
        return value
    if isinstance(value, Rational):
        return Scalar(value)
    if isinstance(value, complex):
        raise TypeError("floating point complex values are not exact; pass a Scalar")
    if isinstance(value, str):
        return Scalar.from_text(value)
    raise TypeError(f"cannot convert {type(value).__name__} to Scalar")
