"""Independent reference computations used only by the tests.

None of these share code with the package: polynomials are plain dicts,
determinants go through sympy, and Smith invariants come from gcds of
minors.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import sympy


def dict_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            out[ea + eb] = out.get(ea + eb, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def dict_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + c
    return {e: c for e, c in out.items() if c}


def dict_normal(a: dict) -> dict:
    """Shift to min exponent 0 and make the top coefficient positive."""
    if not a:
        return {}
    lo = min(a)
    sign = 1 if a[max(a)] > 0 else -1
    return {e - lo: sign * c for e, c in a.items()}


def minkus_alexander(p: int, q: int) -> dict:
    """Alexander polynomial of b(p, q) for odd q, up to units.

    ``sum_{k=0}^{p-1} (-1)^k t^{e_k}`` with ``e_k = sum_{i<=k} eps_i`` and
    ``eps_i = (-1)^floor(i q / p)``.
    """
    if q % 2 == 0:
        q -= p
    out: dict = {}
    e = 0
    for k in range(p):
        if k:
            e += -1 if (k * q // p) % 2 else 1
        out[e] = out.get(e, 0) + (-1) ** k
    return dict_normal({x: c for x, c in out.items() if c})


def sympy_seifert_alexander(V) -> dict:
    t = sympy.Symbol("t")
    M = sympy.Matrix(V)
    det = sympy.expand((M - t * M.T).det())
    poly = sympy.Poly(det, t)
    return dict_normal({m[0]: int(c) for m, c in zip(poly.monoms(), poly.coeffs())})


def cf_fraction(entries) -> Fraction | None:
    value = None
    for c in reversed(entries):
        value = Fraction(c) if value is None else c + 1 / value
    return value


def schubert_equivalent(p1, q1, p2, q2, mirror=False) -> bool:
    if p1 != p2:
        return False
    if p1 == 1:
        return True
    cands = {q1 % p1, pow(q1, -1, p1)}
    if mirror:
        cands |= {(-x) % p1 for x in cands}
    return q2 % p2 in cands


def torus_alexander(q: int) -> dict:
    # (t^q + 1)/(t + 1) for odd q > 0
    return {i: (-1) ** i for i in range(abs(q))}


def closed_form_oracle(m: int, n: int) -> dict:
    """Direct transcription of the closed form, in dict arithmetic."""
    if m == 0:
        return {e: c for e, c in {1: n, -1: n, 0: -(2 * n - 1)}.items() if c}
    out = {m + 1: n, -m - 1: n}
    out = dict_add(out, {m: -3 * n, -m: -3 * n})
    for i in range(-m + 1, m):
        out = dict_add(out, {i: (4 * n + 1) * (-1) ** ((i - m + 1) % 2)})
    return out


def determinantal_divisors(A) -> list[int]:
    """Smith invariant factors from gcds of k x k minors (brute force)."""
    m = len(A)
    n = len(A[0]) if A else 0
    M = sympy.Matrix(A) if m and n else None
    d_prev = 1
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in itertools.combinations(range(m), k):
            for cols in itertools.combinations(range(n), k):
                g = math.gcd(g, int(M.extract(list(rows), list(cols)).det()))
        if g == 0:
            break
        out.append(g // d_prev)
        d_prev = g
    return out


def rank_over_q(A) -> int:
    if not A or not A[0]:
        return 0
    return sympy.Matrix(A).rank()


def elementary_symmetric_by_expansion(values) -> list[int]:
    """Coefficients of prod (1 + v x): index r is e_r."""
    coeffs = [1]
    for v in values:
        coeffs = [a + v * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    return coeffs
