"""Exact Laurent polynomials over the integers.

Elements of Z[t, t^-1] are stored sparsely as a sorted tuple of
``(exponent, coefficient)`` pairs with no zero coefficients.  Python ints
are arbitrary precision, so products of many Alexander polynomials stay
exact.

Alexander polynomials are only defined up to the units ``±t^j``; the
helpers :func:`unit_normalize` and :func:`doteq` work in that quotient.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class ZeroPolynomial(ValueError):
    """Raised when an operation needs a nonzero polynomial."""


class EvalAtZero(ValueError):
    """Raised when evaluating a Laurent polynomial at t = 0."""


class ZeroDivisor(ZeroDivisionError):
    """Raised when dividing by the zero polynomial."""


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist in Z[t, t^-1]."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text or JSON."""


class LaurentPoly:
    """An immutable element of Z[t, t^-1].

    >>> t = LaurentPoly.t()
    >>> str((t - 1 + t**-1) ** 2)
    't^-2 - 2*t^-1 + 3 - 2*t + t^2'
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        if isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = coefficients
        acc: dict[int, int] = {}
        for e, c in items:
            e, c = int(e), int(c)
            acc[e] = acc.get(e, 0) + c
        self._terms = tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        self._hash = None

    @classmethod
    def _from_sorted(cls, terms: tuple[tuple[int, int], ...]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def t(cls, power: int = 1) -> "LaurentPoly":
        return cls._from_sorted(((power, 1),))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls._from_sorted(((0, c),) if c else ())

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPoly":
        return cls._from_sorted(((e, c),) if c else ())

    # -- queries -----------------------------------------------------------

    @property
    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, e: int) -> int:
        for ee, c in self._terms:
            if ee == e:
                return c
        return 0

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        return len(self._terms) == 1 and abs(self._terms[0][1]) == 1

    @property
    def min_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no support")
        return self._terms[0][0]

    @property
    def max_exp(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no support")
        return self._terms[-1][0]

    @property
    def leading_coeff(self) -> int:
        if not self._terms:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self._terms[-1][1]

    def width(self) -> int:
        return self.max_exp - self.min_exp

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._from_sorted(tuple((e, -c) for e, c in self._terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            # only monomials ±t^j are invertible
            if not self.is_unit():
                raise ValueError("negative power of a non-unit")
            (e, c), = self._terms
            return LaurentPoly._from_sorted(((e * n, c ** -n),))
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, j: int) -> "LaurentPoly":
        """Multiply by t^j."""
        return LaurentPoly._from_sorted(tuple((e + j, c) for e, c in self._terms))

    def substitute_inverse(self) -> "LaurentPoly":
        """Return p(t^-1)."""
        return LaurentPoly._from_sorted(tuple(sorted((-e, c) for e, c in self._terms)))

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._terms)
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({to_text(self)!r})"

    def __str__(self):
        return to_text(self)

    def __call__(self, value: int) -> Fraction:
        return evaluate(self, value)


@dataclass(frozen=True)
class UnitNormalForm:
    """``poly`` times ``sign * t**shift`` equals the original polynomial."""

    poly: LaurentPoly
    sign: int
    shift: int

    @property
    def applied_unit(self) -> tuple[int, int]:
        return (self.sign, self.shift)


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not b._terms:
        return a
    if not a._terms:
        return b
    acc = dict(a._terms)
    for e, c in b._terms:
        acc[e] = acc.get(e, 0) + c
    return LaurentPoly._from_sorted(tuple(sorted((e, c) for e, c in acc.items() if c)))


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    if not a._terms or not b._terms:
        return LaurentPoly()
    acc: dict[int, int] = {}
    for ea, ca in a._terms:
        for eb, cb in b._terms:
            e = ea + eb
            acc[e] = acc.get(e, 0) + ca * cb
    return LaurentPoly._from_sorted(tuple(sorted((e, c) for e, c in acc.items() if c)))


def product(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    result = LaurentPoly.const(1)
    for p in polys:
        result = mul(result, p)
    return result


def unit_normalize(p: LaurentPoly) -> UnitNormalForm:
    """Canonical representative of ``p`` modulo ``±t^j``.

    The representative has minimum exponent 0 and a positive top coefficient.
    """
    if p.is_zero():
        raise ZeroPolynomial("cannot normalize the zero polynomial")
    shift = p.min_exp
    sign = 1 if p.leading_coeff > 0 else -1
    terms = tuple((e - shift, sign * c) for e, c in p.terms)
    return UnitNormalForm(LaurentPoly._from_sorted(terms), sign, shift)


def canonical(p: LaurentPoly) -> LaurentPoly:
    """Hashable key for the ≐-class of ``p``; the zero polynomial is its own class."""
    if p.is_zero():
        return p
    return unit_normalize(p).poly


def doteq(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True iff ``a == ±t^j * b`` for some integer j."""
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return unit_normalize(a).poly == unit_normalize(b).poly


def evaluate(p: LaurentPoly, value: int) -> Fraction:
    """Exact value of ``p`` at an integer point."""
    if value == 0:
        raise EvalAtZero("Laurent polynomials are undefined at t = 0")
    total = Fraction(0)
    for e, c in p.terms:
        total += c * Fraction(value) ** e
    return total


def degree_span(p: LaurentPoly) -> tuple[int, int]:
    if p.is_zero():
        raise ZeroPolynomial("zero polynomial has no degree span")
    return (p.min_exp, p.max_exp)


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with ``a == b * q``, or raise :class:`NotDivisible`.

    Long division from the top exponent; every step must have an integral
    leading quotient.
    """
    if b.is_zero():
        raise ZeroDivisor("division by the zero polynomial")
    if a.is_zero():
        return a
    b_lo, b_hi = b.min_exp, b.max_exp
    b_lead = b.leading_coeff
    quotient: list[tuple[int, int]] = []
    rem = a
    while not rem.is_zero():
        if rem.width() < b_hi - b_lo:
            raise NotDivisible(f"{a} is not divisible by {b}")
        c, r = divmod(rem.leading_coeff, b_lead)
        if r:
            raise NotDivisible(f"{a} is not divisible by {b}")
        e = rem.max_exp - b_hi
        quotient.append((e, c))
        rem = rem - b.shift(e) * c
    return LaurentPoly(quotient)


# -- text and JSON forms ---------------------------------------------------


def _monomial_text(c: int, e: int) -> str:
    if e == 0:
        return str(c)
    var = "t" if e == 1 else f"t^{e}"
    if c == 1:
        return var
    return f"{c}*{var}"


def to_text(p: LaurentPoly) -> str:
    """Render in exponent-ascending order, e.g. ``t^-1 - 1 + t``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, (e, c) in enumerate(p.terms):
        body = _monomial_text(abs(c), e)
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<coef>\d+)\s*(?:\*?\s*(?P<var1>t)(?:\s*\^\s*(?P<exp1>[+-]?\d+))?)?
      | (?P<var2>t)(?:\s*\^\s*(?P<exp2>[+-]?\d+))?
    )
    """,
    re.VERBOSE,
)


def parse_text(text: str) -> LaurentPoly:
    """Parse the ``c*t^e`` text form.  Coefficient 1 and ``*`` may be omitted."""
    s = text.strip()
    if not s:
        raise PolyParseError("empty polynomial text")
    terms: list[tuple[int, int]] = []
    pos = 0
    first = True
    while pos < len(s):
        while pos < len(s) and s[pos].isspace():
            pos += 1
        if pos >= len(s):
            break
        if not first and s[pos] not in "+-":
            raise PolyParseError(f"expected '+' or '-' at position {pos} in {text!r}")
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
            while pos < len(s) and s[pos].isspace():
                pos += 1
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise PolyParseError(f"cannot parse term at position {pos} in {text!r}")
        if m.group("sign"):
            raise PolyParseError(f"doubled sign at position {pos} in {text!r}")
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            if m.group("var1"):
                e = int(m.group("exp1")) if m.group("exp1") is not None else 1
            else:
                e = 0
        else:
            c = 1
            e = int(m.group("exp2")) if m.group("exp2") is not None else 1
        terms.append((e, sign * c))
        pos = m.end()
        first = False
    return LaurentPoly(terms)


def to_json_obj(p: LaurentPoly) -> dict[str, str]:
    return {str(e): str(c) for e, c in p.terms}


def from_json_obj(obj: Mapping) -> LaurentPoly:
    try:
        return LaurentPoly((int(k), int(v)) for k, v in obj.items())
    except (TypeError, ValueError, AttributeError) as exc:
        raise PolyParseError(f"bad polynomial JSON: {obj!r}") from exc


def parse(text: str) -> LaurentPoly:
    """Accept either the text form or the JSON object form."""
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise PolyParseError(str(exc)) from exc
        if not isinstance(obj, dict):
            raise PolyParseError("polynomial JSON must be an object")
        return from_json_obj(obj)
    return parse_text(s)
