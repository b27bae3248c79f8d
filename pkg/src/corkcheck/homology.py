"""Integer homology of finite chain complexes via Smith normal form.

A handle decomposition gives a cellular chain complex with one generator
per handle, so handle counts and boundary maps pin down integral homology.
The boundary maps of the twisted doubles are not transcribed from any
diagram here: the shipped complexes are *witnesses* that realize the stated
handle counts and homology, nothing more.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Sequence

Matrix = list[list[int]]


class NotAComplex(ValueError):
    """Shapes are inconsistent or some composite boundary is nonzero."""


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix, inner: int | None = None) -> Matrix:
    if inner is None:
        inner = len(b) if b else (len(a[0]) if a else 0)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)] for i in range(len(a))]


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


@dataclass(frozen=True)
class SmithDecomposition:
    """``A = U @ S @ V`` with ``U``, ``V`` unimodular and ``S`` in Smith form."""

    U: Matrix
    S: Matrix
    V: Matrix

    @property
    def diagonal(self) -> list[int]:
        return [self.S[i][i] for i in range(min(len(self.S), len(self.V)))]

    @property
    def invariant_factors(self) -> list[int]:
        return [d for d in self.diagonal if d]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)


def smith_normal_form(A: Sequence[Sequence[int]], ncols: int | None = None) -> SmithDecomposition:
    """Smith normal form over Z with transformation matrices.

    Pivot policy: smallest nonzero absolute value in the active block, ties
    broken by lowest (row, column).  ``ncols`` is only needed for matrices
    with no rows.
    """
    a = [list(map(int, r)) for r in A]
    m = len(a)
    n = len(a[0]) if a else (ncols or 0)
    U, V = identity(m), identity(n)

    # each elementary operation on ``a`` is mirrored so that A == U a V holds
    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        for row in U:
            row[i], row[j] = row[j], row[i]

    def add_row(i, j, c):  # row_i += c * row_j
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        for row in U:
            row[j] -= c * row[i]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        for row in U:
            row[i] = -row[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        V[i], V[j] = V[j], V[i]

    def add_col(i, j, c):  # col_i += c * col_j
        for row in a:
            row[i] += c * row[j]
        V[j] = [x - c * y for x, y in zip(V[j], V[i])]

    for s in range(min(m, n)):
        best = None
        for i in range(s, m):
            for j in range(s, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(s, best[0])
        swap_cols(s, best[1])
        while True:
            done = True
            for i in range(s + 1, m):
                if a[i][s]:
                    add_row(i, s, -(a[i][s] // a[s][s]))
                    if a[i][s]:
                        done = False
            for j in range(s + 1, n):
                if a[s][j]:
                    add_col(j, s, -(a[s][j] // a[s][s]))
                    if a[s][j]:
                        done = False
            if not done:
                # a smaller remainder appeared in row or column s; move it to the pivot
                cand = [(abs(a[i][s]), i, s) for i in range(s + 1, m) if a[i][s]]
                cand += [(abs(a[s][j]), s, j) for j in range(s + 1, n) if a[s][j]]
                _, i, j = min(cand)
                if i != s:
                    swap_rows(s, i)
                else:
                    swap_cols(s, j)
                continue
            bad = next(
                (i for i in range(s + 1, m) for j in range(s + 1, n) if a[i][j] % a[s][s]),
                None,
            )
            if bad is None:
                break
            add_row(s, bad, 1)
        if a[s][s] < 0:
            negate_row(s)
    return SmithDecomposition(U=U, S=a, V=V)


def is_smith_form(S: Matrix) -> bool:
    m = len(S)
    n = len(S[0]) if S else 0
    for i in range(m):
        for j in range(n):
            if i != j and S[i][j]:
                return False
    diag = [S[i][i] for i in range(min(m, n))]
    if any(d < 0 for d in diag):
        return False
    for x, y in zip(diag, diag[1:]):
        if x == 0 and y != 0:
            return False
        if x and y % x:
            return False
    return True


@dataclass(frozen=True)
class HomologyGroups:
    betti: tuple[int, ...]
    torsion: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.betti) != len(self.torsion):
            raise ValueError("betti and torsion must cover the same degrees")
        for ds in self.torsion:
            if any(d < 2 for d in ds) or any(b % a for a, b in zip(ds, ds[1:])):
                raise ValueError(f"torsion {ds} is not a divisibility chain of entries >= 2")

    @classmethod
    def free(cls, betti: Sequence[int]) -> "HomologyGroups":
        return cls(tuple(betti), tuple(() for _ in betti))

    @property
    def euler(self) -> int:
        return sum((-1) ** i * b for i, b in enumerate(self.betti))

    def to_json(self) -> dict:
        return {"betti": list(self.betti), "torsion": [list(t) for t in self.torsion]}


@dataclass(frozen=True)
class ChainComplex:
    """``boundaries[i]`` is the map from degree ``i + 1`` to degree ``i``."""

    ranks: tuple[int, ...]
    boundaries: tuple[tuple[tuple[int, ...], ...], ...] = field(default=())
    label: str = ""

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        if any(r < 0 for r in ranks):
            raise NotAComplex("ranks must be nonnegative")
        bds = list(self.boundaries)
        if len(bds) > max(len(ranks) - 1, 0):
            raise NotAComplex("more boundary maps than degrees")
        bds += [None] * (max(len(ranks) - 1, 0) - len(bds))
        fixed = []
        for i, d in enumerate(bds):
            rows, cols = ranks[i], ranks[i + 1]
            if d is None:
                d = [[0] * cols for _ in range(rows)]
            d = tuple(tuple(int(x) for x in r) for r in d)
            if len(d) != rows or any(len(r) != cols for r in d):
                raise NotAComplex(f"boundary {i + 1} must be {rows}x{cols}")
            fixed.append(d)
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "boundaries", tuple(fixed))

    @classmethod
    def zero(cls, ranks: Sequence[int], label: str = "") -> "ChainComplex":
        return cls(tuple(ranks), (), label)

    def check(self) -> None:
        for i in range(1, len(self.boundaries)):
            d_low = [list(r) for r in self.boundaries[i - 1]]
            d_high = [list(r) for r in self.boundaries[i]]
            prod = matmul(d_low, d_high, inner=self.ranks[i])
            if not is_zero_matrix(prod):
                raise NotAComplex(f"boundary {i} composed with boundary {i + 1} is nonzero")

    def to_json(self) -> dict:
        return {"ranks": list(self.ranks), "boundaries": [[list(r) for r in d] for d in self.boundaries]}

    @classmethod
    def from_json(cls, obj: dict) -> "ChainComplex":
        try:
            return cls(tuple(obj["ranks"]), tuple(obj.get("boundaries", ())), obj.get("label", ""))
        except (KeyError, TypeError) as exc:
            raise NotAComplex(f"bad chain complex JSON: {exc}") from exc


def _rank_and_factors(d: Sequence[Sequence[int]], ncols: int) -> tuple[int, list[int]]:
    if not d or ncols == 0:
        return 0, []
    snf = smith_normal_form(d, ncols)
    return snf.rank, snf.invariant_factors


def homology_of(c: ChainComplex) -> HomologyGroups:
    c.check()
    top = len(c.ranks)
    info = [_rank_and_factors(c.boundaries[i], c.ranks[i + 1]) for i in range(top - 1)]
    betti, torsion = [], []
    for i in range(top):
        rank_out = info[i - 1][0] if i >= 1 else 0
        rank_in, factors = info[i] if i < top - 1 else (0, [])
        betti.append(c.ranks[i] - rank_out - rank_in)
        torsion.append(tuple(d for d in factors if d > 1))
    return HomologyGroups(tuple(betti), tuple(torsion))


def euler_characteristic(c: ChainComplex) -> int:
    return sum((-1) ** i * r for i, r in enumerate(c.ranks))


def is_homotopy_sphere_homology(h: HomologyGroups, dim: int = 4) -> bool:
    if len(h.betti) != dim + 1:
        return False
    expected = [1] + [0] * (dim - 1) + [1]
    return list(h.betti) == expected and not any(h.torsion)


def connected_sum_homology(s3s1: int, s2s2: int) -> HomologyGroups:
    """Homology of ``#^a (S^3 x S^1) # #^b (S^2 x S^2)``; ``a = b = 0`` is S^4."""
    return HomologyGroups.free((1, s3s1, 2 * s2s2, s3s1, 1))


def load_complex(path: str | Path) -> ChainComplex:
    with open(path) as fh:
        return ChainComplex.from_json(json.load(fh))


def witness_complexes() -> dict[str, ChainComplex]:
    """Complexes shipped with the package, keyed by name."""
    raw = resources.files("corkcheck").joinpath("data/witnesses.json").read_text()
    return {name: ChainComplex.from_json(obj) for name, obj in json.loads(raw).items()}
