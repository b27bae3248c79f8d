"""Formal Seiberg-Witten products over E(k) and recovery of twist tuples.

Knot surgery on a torus multiplies the Seiberg-Witten invariant by the
Alexander polynomial of the knot, so twisting the k-fold boundary sum of
corks by ``(n1, ..., nk)`` gives ``SW(E(k)) * prod_i Delta(i, n_i)``.  The
common factor ``SW(E(k))`` is kept as an opaque tag and never expanded;
everything here is about the product of Alexander polynomials.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .alexander import NotSymmetrizable, conway_normalize, delta_closed
from .laurent import (
    LaurentPoly,
    NotDivisible,
    canonical,
    doteq,
    exact_divide,
    product as poly_product,
)

DEFAULT_BUDGET = 2_000_000


class KMismatch(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class NoSolution(LookupError):
    """No tuple in the search box produces the given product."""


class AmbiguousRecovery(LookupError):
    """Two or more tuples produce the same product.

    If this is ever raised inside the injectivity range it is a
    counterexample to tuple recovery, so the witnesses are kept.
    """

    def __init__(self, witnesses: Sequence[tuple[int, ...]]):
        self.witnesses = [tuple(w) for w in witnesses]
        super().__init__(f"ambiguous recovery: {self.witnesses}")


class GenericityFailure(ValueError):
    """The leading-coefficient argument needs every parameter nonzero."""


@dataclass(frozen=True)
class ConstellationSignature:
    k: int
    tuple: tuple[int, ...]
    product: LaurentPoly
    common_factor: str = "SW_{E(k)}"

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be positive")
        if len(self.tuple) != self.k:
            raise ValueError(f"tuple {self.tuple} does not have length {self.k}")

    @property
    def key(self) -> LaurentPoly:
        return canonical(self.product)


def factor_width(i: int, n: int) -> int:
    """Degree-span width of ``Delta(i, n)`` for ``i >= 1``."""
    return 2 * (i + 1) if n else 2 * (i - 1)


def sw_product(k: int, params: Sequence[int]) -> ConstellationSignature:
    """``prod_{i=1..k} Delta(i, n_i)`` with the ``SW(E(k))`` factor left symbolic."""
    params = tuple(int(x) for x in params)
    if k < 1:
        raise ValueError("k must be positive")
    if len(params) != k:
        raise ValueError(f"expected {k} parameters, got {len(params)}")
    prod = poly_product(delta_closed(i, n) for i, n in enumerate(params, start=1))
    return ConstellationSignature(k, params, prod)


def block_product(k: int, p: int, block: Sequence[int]) -> LaurentPoly:
    """``prod_{i=p+1..k} Delta(i, n_i)`` for the trailing block of a tuple."""
    if len(block) != k - p:
        raise ValueError(f"block for p = {p} needs {k - p} entries, got {len(block)}")
    return poly_product(delta_closed(i, n) for i, n in zip(range(p + 1, k + 1), block))


def base_signature(k: int) -> ConstellationSignature:
    """``K(0, ..., 0)``, the connected sum of ``T(2, 2i - 1)``."""
    return sw_product(k, (0,) * k)


def distinguishable(a: ConstellationSignature, b: ConstellationSignature) -> bool:
    if a.k != b.k:
        raise KMismatch(f"k differs: {a.k} vs {b.k}")
    return not doteq(a.product, b.product)


def _search(target: LaurentPoly, start: int, k: int, bound: int, found: list, prefix: list, limit: int):
    if start > k:
        if target.is_unit():
            found.append(tuple(prefix))
        return
    if target.is_zero():
        return
    width = target.width()
    # remaining factors each contribute width 2(i-1) or 2(i+1)
    rest_min = sum(factor_width(i, 0) for i in range(start + 1, k + 1))
    rest_max = sum(factor_width(i, 1) for i in range(start + 1, k + 1))
    for n in range(-bound, bound + 1):
        w = factor_width(start, n)
        if not rest_min <= width - w <= rest_max:
            continue
        d = delta_closed(start, n)
        if d.is_unit():
            quotient = target
        else:
            if n and target.leading_coeff % n:
                continue
            try:
                quotient = exact_divide(target, d)
            except NotDivisible:
                continue
        prefix.append(n)
        _search(quotient, start + 1, k, bound, found, prefix, limit)
        prefix.pop()
        if len(found) >= limit:
            return


def find_tuples(k: int, product: LaurentPoly, bound: int, *, limit: int | None = None) -> list[tuple[int, ...]]:
    """All tuples in ``[-bound, bound]^k`` whose product is ``≐ product``.

    Depth-first over slots; a branch survives only if the slot's factor
    divides what is left and the remaining width can still be matched.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    found: list[tuple[int, ...]] = []
    if product.is_zero():
        return found
    _search(product, 1, k, bound, found, [], limit or math.inf)
    return sorted(found)


def recover_tuple(k: int, product: LaurentPoly, bound: int) -> tuple[int, ...]:
    """The unique tuple realizing ``product``; raises NoSolution / AmbiguousRecovery."""
    found = find_tuples(k, product, bound)
    if not found:
        raise NoSolution(f"no tuple in [-{bound}, {bound}]^{k} gives {product}")
    if len(found) > 1:
        raise AmbiguousRecovery(found)
    return found[0]


def elementary_symmetric(values: Sequence[int], r: int) -> int:
    return sum(math.prod(c) for c in itertools.combinations(values, r))


@dataclass(frozen=True)
class SymmetricFunctionTrace:
    """Values read off the top coefficients of a block product.

    ``sigma[j]`` is the elementary symmetric polynomial of degree
    ``block_size - j`` in the block's parameters.
    """

    k: int
    p: int
    sigma: tuple[int, ...]
    tail_product: int
    first: int

    @property
    def block_size(self) -> int:
        return self.k - self.p


def _universal_series(order: int) -> tuple[list[int], list[int]]:
    # alpha = 1 - 3x + 4x^2 - 4x^3 + ..., beta = x^2 - x^3 + x^4 - ...
    alpha = [1, -3] + [4 * (-1) ** r for r in range(2, order)]
    beta = [0, 0] + [(-1) ** r for r in range(2, order)]
    return alpha[:order], beta[:order]


def _series_mul(a: list[int], b: list[int], order: int) -> list[int]:
    out = [0] * order
    for i, x in enumerate(a[:order]):
        if x:
            for j, y in enumerate(b[: order - i]):
                out[i + j] += x * y
    return out


def _series_pow(a: list[int], e: int, order: int) -> list[int]:
    out = [1] + [0] * (order - 1)
    for _ in range(e):
        out = _series_mul(out, a, order)
    return out


def sigma_extract(k: int, p: int, product: LaurentPoly) -> SymmetricFunctionTrace:
    """Read ``sigma_K, sigma_{K-1}, ...`` and ``n_{p+1}`` off a block product.

    ``product`` should be ``prod_{i=p+1..k} Delta(i, n_i)`` with every
    ``n_i`` nonzero.  Writing ``x = 1/t`` and dividing each factor by its
    top power, ``Delta(i, n) = n*A_i(x) + B_i(x)`` where ``A_i, B_i`` agree
    with fixed series ``alpha, beta`` up to ``x^(2i)``.  Since every index
    in the block is at least ``p + 1``, the coefficients down to
    ``x^(2p+2)`` are those of ``sum_j sigma_{K-j} alpha^(K-j) beta^j``,
    which is triangular in the sigmas at even orders.  At ``x^(2p+3)`` only
    the factor ``i = p + 1`` deviates, contributing
    ``(n_{p+1} + 1) * n_{p+2} * ... * n_k``; that isolates the tail product
    and hence ``n_{p+1}``.
    """
    if not 0 <= p < k:
        raise ValueError(f"need 0 <= p < k, got p = {p}, k = {k}")
    K = k - p
    expected_top = sum(i + 1 for i in range(p + 1, k + 1))
    try:
        poly = conway_normalize(product)
    except NotSymmetrizable as exc:
        raise GenericityFailure(f"not an Alexander product: {exc}") from exc
    if poly.max_exp != expected_top:
        raise GenericityFailure(
            f"top degree {poly.max_exp} != {expected_top}: some parameter in the block is zero"
        )
    order = 2 * p + 4
    coeff = [poly.coeff(expected_top - r) for r in range(order)]
    alpha, beta = _universal_series(order)
    basis = [
        _series_mul(_series_pow(alpha, K - j, order), _series_pow(beta, j, order), order)
        for j in range(K + 1)
    ]
    jmax = min(K, p + 1)
    sigma: list[int] = []
    for j in range(jmax + 1):
        acc = coeff[2 * j] - sum(sigma[i] * basis[i][2 * j] for i in range(j))
        sigma.append(acc)
    if sigma[0] == 0:
        raise GenericityFailure("top coefficient vanishes")
    if jmax == K and sigma[K] != 1:
        raise GenericityFailure(f"sigma_0 came out {sigma[K]}, not 1")
    r = 2 * p + 3
    known = sum(sigma[j] * basis[j][r] for j in range(jmax + 1))
    # sigma_{K-j} for j > p+1 never reaches order 2p+3 because beta^j starts at x^(2j)
    tail = coeff[r] - known - sigma[0]
    if tail == 0 or sigma[0] % tail:
        raise GenericityFailure(f"tail product {tail} does not divide sigma_K = {sigma[0]}")
    return SymmetricFunctionTrace(k, p, tuple(sigma), tail, sigma[0] // tail)


def decode_generic(k: int, product: LaurentPoly) -> tuple[int, ...]:
    """Peel off ``n_1, n_2, ...`` with :func:`sigma_extract`, dividing as we go."""
    rest = product
    out: list[int] = []
    for p in range(k):
        trace = sigma_extract(k, p, rest)
        out.append(trace.first)
        rest = exact_divide(rest, delta_closed(p + 1, trace.first))
    return tuple(out)


# -- injectivity over a box ------------------------------------------------


@dataclass
class InjectivityReport:
    k: int
    bound: int
    count: int
    collisions: list[list[tuple[int, ...]]] = field(default_factory=list)
    wall_time_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.collisions

    def to_json(self, meta: bool = True) -> dict:
        out = {
            "k": self.k,
            "bound": self.bound,
            "count": self.count,
            "collisions": [[list(t) for t in group] for group in self.collisions],
        }
        if meta:
            out["wall_time_ms"] = round(self.wall_time_ms, 3)
        return out


def box(k: int, bound: int):
    return itertools.product(range(-bound, bound + 1), repeat=k)


def _keys_for(args):
    k, tuples = args
    return [(tup, canonical(sw_product(k, tup).product).terms) for tup in tuples]


def check_budget(k: int, bound: int, budget: int = DEFAULT_BUDGET) -> int:
    cost = k * (2 * bound + 1) ** k
    if cost > budget:
        raise BudgetExceeded(f"k*(2*bound+1)^k = {cost} exceeds budget {budget}")
    return cost


def verify_injectivity(k: int, bound: int, *, budget: int = DEFAULT_BUDGET, jobs: int = 1) -> InjectivityReport:
    """Group every product over the box by its ≐-class and report collisions."""
    if k < 1 or bound < 0:
        raise ValueError("need k >= 1 and bound >= 0")
    check_budget(k, bound, budget)
    start = time.perf_counter()
    tuples = list(box(k, bound))
    if jobs > 1 and len(tuples) > 64:
        size = math.ceil(len(tuples) / (jobs * 4))
        chunks = [(k, tuples[i : i + size]) for i in range(0, len(tuples), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = [kv for part in pool.map(_keys_for, chunks) for kv in part]
    else:
        pairs = _keys_for((k, tuples))
    groups: dict = {}
    for tup, key in pairs:
        groups.setdefault(key, []).append(tup)
    collisions = sorted(sorted(g) for g in groups.values() if len(g) > 1)
    return InjectivityReport(
        k=k,
        bound=bound,
        count=len(tuples),
        collisions=collisions,
        wall_time_ms=(time.perf_counter() - start) * 1000,
    )
