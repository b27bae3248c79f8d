"""Alexander polynomials of two-bridge knots, by two independent routes.

Route one builds the Seifert matrix of the plumbed surface described by an
even continued fraction and expands ``det(V - t V^T)`` exactly.  Route two
is the closed form for ``Delta(m, n)``.  The two are compared in the test
suite and by ``corkcheck verify --suite crosscheck``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .laurent import (
    LaurentPoly,
    canonical,
    evaluate,
    exact_divide,
    unit_normalize,
)
from .twobridge import EvenContinuedFraction, UnsupportedParams


class NotSymmetrizable(ValueError):
    """No unit multiple is symmetric with value 1 at t = 1."""


class InvalidSeifertMatrix(ValueError):
    pass


def bareiss_det(rows: Sequence[Sequence], divide: Callable, one) -> object:
    """Fraction-free determinant over an integral domain.

    ``divide(a, b)`` must be exact division in the domain.
    """
    n = len(rows)
    if n == 0:
        return one
    a = [list(r) for r in rows]
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return one - one
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = divide(pivot * a[i][j] - a[i][k] * a[k][j], prev)
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def int_det(rows: Sequence[Sequence[int]]) -> int:
    return bareiss_det(rows, lambda x, y: x // y, 1)


def poly_det(rows: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    n = len(rows)
    if n and all(rows[i][j] == 0 for i in range(n) for j in range(n) if abs(i - j) > 1):
        return _tridiagonal_det(rows)
    return bareiss_det(rows, exact_divide, LaurentPoly.const(1))


def _tridiagonal_det(rows) -> LaurentPoly:
    # continuant recurrence D_k = a_kk D_{k-1} - a_{k-1,k} a_{k,k-1} D_{k-2}
    d_prev, d = LaurentPoly.const(1), rows[0][0]
    for k in range(1, len(rows)):
        d_prev, d = d, rows[k][k] * d - rows[k - 1][k] * rows[k][k - 1] * d_prev
    return d


@dataclass(frozen=True)
class SeifertMatrix:
    """Integer ``2g x 2g`` matrix with ``det(V - V^T) = 1``."""

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise InvalidSeifertMatrix("Seifert matrix must be square")
        if n % 2:
            raise InvalidSeifertMatrix("Seifert matrix must have even dimension")
        skew = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
        if int_det(skew) != 1:
            raise InvalidSeifertMatrix("det(V - V^T) must be 1")

    @property
    def size(self) -> int:
        return len(self.entries)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.size))


def seifert_from_cf(cf: EvenContinuedFraction) -> SeifertMatrix:
    """Bidiagonal Seifert matrix of the plumbing for ``[2a1, ..., 2a_2g]``.

    Diagonal ``(a1, -a2, a3, -a4, ...)``, ones on the superdiagonal.  The
    alternating sign is what makes ``[2, -2]`` the trefoil under the
    ``c1 + 1/(c2 + ...)`` convention.
    """
    n = len(cf.entries)
    rows = [[0] * n for _ in range(n)]
    for i, c in enumerate(cf.entries):
        rows[i][i] = (c // 2) * (-1 if i % 2 else 1)
        if i + 1 < n:
            rows[i][i + 1] = 1
    return SeifertMatrix(tuple(tuple(r) for r in rows))


def alexander_det(V: SeifertMatrix) -> LaurentPoly:
    """Raw ``det(V - t V^T)`` with no normalization."""
    t = LaurentPoly.t()
    n = V.size
    rows = [
        [LaurentPoly.const(V.entries[i][j]) - t * V.entries[j][i] for j in range(n)]
        for i in range(n)
    ]
    return poly_det(rows)


def alex_from_seifert(V: SeifertMatrix) -> LaurentPoly:
    """Alexander polynomial as its unit-normal representative."""
    return unit_normalize(alexander_det(V)).poly


def alex_of_cf(cf: EvenContinuedFraction) -> LaurentPoly:
    return alex_from_seifert(seifert_from_cf(cf))


def torus_delta(q: int) -> LaurentPoly:
    """``Delta(T(2, q))`` for odd q, symmetric form ``t^(g) - ... + t^(-g)``."""
    if q % 2 == 0:
        raise ValueError("T(2, q) is a knot only for odd q")
    g = (abs(q) - 1) // 2
    return LaurentPoly({i: (-1) ** (g - i) for i in range(-g, g + 1)})


def delta_closed(m: int, n: int) -> LaurentPoly:
    """Closed-form ``Delta(m, n)``, already in symmetric form with value 1 at t = 1."""
    if m == -1:
        return delta_closed(0, n + 1)
    if m <= -2:
        raise UnsupportedParams(f"Delta(m, n) is not defined for m = {m}")
    if m == 0:
        return LaurentPoly({1: n, -1: n, 0: -(2 * n - 1)})
    coeffs: dict[int, int] = {}
    for i in range(-m + 1, m):
        coeffs[i] = (4 * n + 1) * (1 if (i - m + 1) % 2 == 0 else -1)
    for e, c in ((m + 1, n), (-m - 1, n), (m, -3 * n), (-m, -3 * n)):
        coeffs[e] = coeffs.get(e, 0) + c
    return LaurentPoly(coeffs)


def determinant(p: LaurentPoly) -> int:
    """Knot determinant ``|Delta(-1)|``."""
    return abs(int(evaluate(p, -1)))


def conway_normalize(p: LaurentPoly) -> LaurentPoly:
    """The unit multiple with ``p(t) = p(1/t)`` and ``p(1) = 1``."""
    if p.is_zero():
        raise NotSymmetrizable("zero polynomial")
    lo, hi = p.min_exp, p.max_exp
    if (lo + hi) % 2:
        raise NotSymmetrizable(f"{p} has odd width; no symmetric unit multiple")
    q = p.shift(-(lo + hi) // 2)
    if q.substitute_inverse() != q:
        raise NotSymmetrizable(f"{p} is not palindromic")
    v = evaluate(q, 1)
    if v == -1:
        q = -q
    elif v != 1:
        raise NotSymmetrizable(f"{p} takes the value {v} at t = 1")
    return q


@dataclass
class DistinctnessReport:
    params: list[tuple[int, int]]
    pairs_checked: int
    collisions: list[tuple[tuple[int, int], tuple[int, int]]] = field(default_factory=list)
    in_proven_range: bool = True

    @property
    def count(self) -> int:
        return len(self.params)

    @property
    def ok(self) -> bool:
        return not self.collisions

    def to_json(self) -> dict:
        return {
            "count": self.count,
            "pairs": self.pairs_checked,
            "in_proven_range": self.in_proven_range,
            "collisions": [[list(a), list(b)] for a, b in self.collisions],
        }


def delta_family_distinct(m_range: Iterable[int], n_range: Iterable[int]) -> DistinctnessReport:
    """Report every pair of grid points whose polynomials agree up to units.

    The distinctness result only covers ``m >= 1``; a grid reaching below
    that is still checked but marked ``in_proven_range = False``.
    """
    ns = list(n_range)
    params = [(m, n) for m in m_range for n in ns]
    keys = {pt: canonical(delta_closed(*pt)) for pt in params}
    collisions = [(a, b) for a, b in itertools.combinations(params, 2) if keys[a] == keys[b]]
    n_pairs = len(params) * (len(params) - 1) // 2
    return DistinctnessReport(
        params=params,
        pairs_checked=n_pairs,
        collisions=collisions,
        in_proven_range=all(m >= 1 for m, _ in params),
    )
