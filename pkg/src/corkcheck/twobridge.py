"""Two-bridge (rational) knots: fractions, even continued fractions, families.

Conventions, fixed once for the whole package:

* A continued fraction ``[c1, c2, ..., cr]`` denotes
  ``c1 + 1/(c2 + 1/(... + 1/cr))``.  Its numerator is the determinant
  ``p`` of the knot; the knot is ``b(p, q)`` with ``q`` the denominator
  reduced mod ``p``.
* ``b(p, 1)`` is taken as the right-handed torus knot ``T(2, p)``; its
  mirror is ``b(p, -1) = b(p, p - 1)``.  Alexander polynomials cannot see
  this choice, so it is a convention, anchored so that the family below
  reproduces the stated chiralities (``K(2, 0) = T(2, 3)``,
  ``K(0, 1) = T(2, -3)``).
* Two fractions are equivalent (Schubert) iff ``p = p'`` and
  ``q' = q^(+-1) mod p``.  Mirrors additionally allow ``q' = -q^(+-1)``.

The knots ``K(m, n)`` are pinned by their Alexander polynomials.  A search
over all fractions of the right determinant (:func:`search_family_fractions`)
singles out the class of

    p / q = ((4n + 1)(2m - 1) + 8n) / (4n + 1)

on every grid point examined, whose even continued fraction is
``[-2, 2] * m + [2n, -2]`` after collapsing zero entries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence


class InvalidFraction(ValueError):
    pass


class InvalidContinuedFraction(ValueError):
    pass


class UnsupportedParams(ValueError):
    """Parameters outside the range where a family is defined or validated."""


@dataclass(frozen=True, order=True)
class TwoBridgeFraction:
    """Schubert normal form ``p/q`` of a two-bridge knot.

    ``p`` is odd and positive, ``0 < q < p`` with ``gcd(p, q) = 1``; the
    unknot is ``(1, 0)``.  Use :meth:`of` to reduce an arbitrary pair.
    """

    p: int
    q: int

    def __post_init__(self):
        if self.p <= 0 or self.p % 2 == 0:
            raise InvalidFraction(f"p must be odd and positive, got {self.p}")
        if self.p == 1:
            if self.q != 0:
                raise InvalidFraction("the unknot is (1, 0)")
        elif not 0 < self.q < self.p or math.gcd(self.p, self.q) != 1:
            raise InvalidFraction(f"{self.p}/{self.q} is not in normal form")

    @classmethod
    def of(cls, num: int, den: int) -> "TwoBridgeFraction":
        """Reduce an arbitrary coprime pair ``num/den`` to normal form."""
        if num == 0:
            raise InvalidFraction("numerator 0 is a two-component unlink")
        if num < 0:
            num, den = -num, -den
        if math.gcd(num, den) != 1:
            raise InvalidFraction(f"{num}/{den} is not reduced")
        if num % 2 == 0:
            raise InvalidFraction(f"{num}/{den} is a two-component link")
        return cls(num, den % num)

    @classmethod
    def parse(cls, text: str) -> "TwoBridgeFraction":
        try:
            a, b = text.strip().split("/")
            return cls.of(int(a), int(b))
        except ValueError as exc:
            if isinstance(exc, InvalidFraction):
                raise
            raise InvalidFraction(f"expected 'p/q', got {text!r}") from exc

    @property
    def determinant(self) -> int:
        return self.p

    def is_unknot(self) -> bool:
        return self.p == 1

    def mirror(self) -> "TwoBridgeFraction":
        return TwoBridgeFraction.of(self.p, -self.q) if self.p > 1 else self

    def inverse_q(self) -> int:
        return pow(self.q, -1, self.p) if self.p > 1 else 0

    def is_torus(self) -> bool:
        """Two-bridge torus knots are exactly ``b(p, +-1)``; the unknot counts."""
        return self.p == 1 or self.q in (1, self.p - 1)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class EvenContinuedFraction:
    """``[2a1, ..., 2a_2g]``: every entry even and nonzero, even length.

    The empty fraction is the unknot (genus 0).
    """

    entries: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) for x in self.entries))
        if len(self.entries) % 2:
            raise InvalidContinuedFraction(f"odd length {len(self.entries)}: {list(self.entries)}")
        for x in self.entries:
            if x == 0 or x % 2:
                raise InvalidContinuedFraction(f"entry {x} is not a nonzero even integer")

    @classmethod
    def parse(cls, text: str) -> "EvenContinuedFraction":
        s = text.strip()
        if s.startswith("[") and s.endswith("]"):
            s = s[1:-1]
        try:
            entries = [int(x) for x in s.split(",") if x.strip()]
        except ValueError as exc:
            raise InvalidContinuedFraction(f"expected '[2,-2,...]', got {text!r}") from exc
        return cls(tuple(entries))

    @property
    def genus(self) -> int:
        return len(self.entries) // 2

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return "[" + ",".join(str(x) for x in self.entries) + "]"


def cf_value(entries: Sequence[int]) -> tuple[int, int]:
    """Numerator and denominator of ``c1 + 1/(c2 + ...)``; ``[]`` is ``1/0``."""
    num, den = 1, 0
    for c in reversed(entries):
        num, den = c * num + den, num
    return num, den


def fraction_from_cf(cf: EvenContinuedFraction) -> TwoBridgeFraction:
    num, den = cf_value(cf.entries)
    return TwoBridgeFraction.of(num, den)


def even_cf(frac: TwoBridgeFraction) -> EvenContinuedFraction:
    """The unique even continued fraction with value ``p/q'``, ``q' = q mod p`` even.

    Each step picks the even partial quotient ``c`` with ``|a - c*b| < |b|``;
    parity forces the expansion to stop after an even number of steps.
    """
    if frac.is_unknot():
        return EvenContinuedFraction(())
    a, b = frac.p, frac.q
    if b % 2:
        b -= frac.p
    out: list[int] = []
    while b != 0:
        c = 2 * math.floor(Fraction(a, 2 * b) + Fraction(1, 2))
        if abs(a - c * b) >= abs(b):
            c += 2 if (a - c * b) * b > 0 else -2
        out.append(c)
        a, b = b, a - c * b
    return EvenContinuedFraction(tuple(out))


def equivalent(a: TwoBridgeFraction, b: TwoBridgeFraction, *, up_to_mirror: bool = False) -> bool:
    """Schubert's classification of unoriented two-bridge knots."""
    if a.p != b.p:
        return False
    if a.p == 1:
        return True
    targets = {a.q, a.inverse_q()}
    if up_to_mirror:
        targets |= {(-x) % a.p for x in targets}
    return b.q in targets


def equivalence_class(frac: TwoBridgeFraction, *, up_to_mirror: bool = False) -> frozenset[int]:
    """All normal-form ``q`` values equivalent to ``frac``."""
    if frac.p == 1:
        return frozenset({0})
    qs = {frac.q, frac.inverse_q()}
    if up_to_mirror:
        qs |= {(-x) % frac.p for x in qs}
    return frozenset(qs)


# -- knot families --------------------------------------------------


def collapse_zeros(entries: list[int]) -> list[int]:
    """Remove zero partial quotients without changing the value.

    ``[..., a, 0, b, ...] = [..., a + b, ...]`` and a trailing ``0`` kills
    the entry before it.
    """
    out = list(entries)
    changed = True
    while changed:
        changed = False
        for i, x in enumerate(out):
            if x != 0:
                continue
            if 0 < i < len(out) - 1:
                out[i - 1 : i + 2] = [out[i - 1] + out[i + 1]]
            elif i == len(out) - 1 and i > 0:
                del out[i - 1 :]
            else:
                continue
            changed = True
            break
    return out


def family_fraction(m: int, n: int) -> TwoBridgeFraction:
    """Fraction of ``K(m, n)``; ``K(-1, n)`` comes out equal to ``K(0, n + 1)``."""
    if m < -1:
        raise UnsupportedParams(f"K(m, n) is only defined for m >= -1, got m = {m}")
    num = (4 * n + 1) * (2 * m - 1) + 8 * n
    return TwoBridgeFraction.of(num, 4 * n + 1)


def family_pattern(m: int, n: int) -> list[int]:
    """Raw plumbing pattern ``[-2, 2] * m + [2n, -2]`` before zero collapse."""
    if m < 0:
        raise UnsupportedParams("the raw pattern starts at m = 0")
    return [-2, 2] * m + [2 * n, -2]


def family_cf(m: int, n: int, *, verify: bool = True) -> EvenContinuedFraction:
    """Even continued fraction of ``K(m, n)``.

    With ``verify`` the result is re-checked against the closed-form
    Alexander polynomial and determinant; a mismatch raises
    :class:`UnsupportedParams` instead of returning an unvalidated knot.
    """
    cf = even_cf(family_fraction(m, n))
    if verify:
        from .alexander import alex_of_cf, delta_closed
        from .laurent import doteq, evaluate

        closed = delta_closed(m, n)
        delta = alex_of_cf(cf)
        if not doteq(delta, closed) or abs(evaluate(closed, -1)) != fraction_from_cf(cf).p:
            raise UnsupportedParams(f"derived pattern does not reproduce Delta({m},{n})")
    return cf


def double_twist_cf(r: int, s: int) -> EvenContinuedFraction:
    """The ``(r, s)`` double twist knot ``kappa(r, s)`` as ``[2r, 2s]``.

    Either parameter zero gives the unknot.  The determinant is ``|4rs + 1|``.
    """
    if r == 0 or s == 0:
        return EvenContinuedFraction(())
    return EvenContinuedFraction((2 * r, 2 * s))


def twist_knot_cf(k: int) -> EvenContinuedFraction:
    """The 2k-twist knot ``kappa(k, -1)`` as ``[2k, -2]``; ``k = 0`` is the unknot."""
    return double_twist_cf(k, -1)


def search_family_fractions(m: int, n: int) -> list[TwoBridgeFraction]:
    """Every two-bridge knot whose Alexander polynomial is ``≐ Delta(m, n)``.

    The determinant ``p = |Delta(m, n)(-1)|`` is forced, so scanning
    ``0 < q < p`` is complete.  Results are class representatives (smallest
    ``q`` of each unoriented class), mirrors merged, sorted.
    """
    from .alexander import alex_of_cf, delta_closed
    from .laurent import canonical, degree_span, evaluate

    target = delta_closed(m, n)
    p = abs(int(evaluate(target, -1)))
    if p == 1:
        return [TwoBridgeFraction(1, 0)]
    key = canonical(target)
    lo, hi = degree_span(target)
    seen: set[int] = set()
    found: list[TwoBridgeFraction] = []
    for q in range(1, p):
        if q in seen or math.gcd(p, q) != 1:
            continue
        frac = TwoBridgeFraction(p, q)
        cls = equivalence_class(frac, up_to_mirror=True)
        seen |= cls
        cf = even_cf(frac)
        # the Seifert polynomial has width at most len(cf)
        if len(cf) < hi - lo:
            continue
        if canonical(alex_of_cf(cf)) == key:
            found.append(TwoBridgeFraction(p, min(cls)))
    return sorted(found)


# -- classification --------------------------------------------------------


class KnotKind(str, Enum):
    TORUS = "TorusKnot"
    UNKNOT = "Unknot"
    LEFT_TREFOIL = "LeftTrefoil"
    NON_TORUS = "NonTorus2Bridge"


@dataclass(frozen=True)
class KnotClass:
    kind: KnotKind
    torus_q: int | None = None  # for TorusKnot: T(2, torus_q)

    def __str__(self):
        if self.kind is KnotKind.TORUS:
            return f"TorusKnot(2,{self.torus_q})"
        return self.kind.value


def _torus_class(q: int) -> KnotClass:
    if abs(q) == 1:
        return KnotClass(KnotKind.UNKNOT)
    if q == -3:
        return KnotClass(KnotKind.LEFT_TREFOIL)
    return KnotClass(KnotKind.TORUS, q)


def classify(m: int, n: int) -> KnotClass:
    """Classification of ``K(m, n)``.

    ``K(-1, n)`` is first reduced to ``K(0, n + 1)``.  ``T(2, +-1)`` is
    reported as the unknot and ``T(2, -3)`` as the left trefoil so that the
    answer does not depend on whether the reduction was applied.
    """
    if (m, n) == (-1, -1):
        return KnotClass(KnotKind.UNKNOT)
    if m == -1:
        m, n = 0, n + 1
    if m < -1:
        raise UnsupportedParams(f"K(m, n) is only defined for m >= -1, got m = {m}")
    if n == 0:
        return _torus_class(2 * m - 1)
    if (m, n) == (0, 1):
        return KnotClass(KnotKind.LEFT_TREFOIL)
    return KnotClass(KnotKind.NON_TORUS)


def classify_fraction(frac: TwoBridgeFraction) -> KnotClass:
    """Same classes, read off a fraction with the ``b(p, 1) = T(2, p)`` convention."""
    if frac.p == 1:
        return KnotClass(KnotKind.UNKNOT)
    if frac.q == 1:
        return _torus_class(frac.p)
    if frac.q == frac.p - 1:
        return _torus_class(-frac.p)
    return KnotClass(KnotKind.NON_TORUS)


def grid(m_range: Iterable[int], n_range: Iterable[int]) -> list[tuple[int, int]]:
    ns = list(n_range)
    return [(m, n) for m in m_range for n in ns]
