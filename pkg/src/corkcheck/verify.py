"""Batch verification suites behind ``corkcheck verify``.

Each suite returns a :class:`VerificationReport`; a report with no
failures is a pass.  Case lists are built in a fixed order and failures
are sorted, so reports are reproducible regardless of ``jobs``.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import alexander as alx
from . import constellation as con
from . import homology as hom
from . import twobridge as tb
from .laurent import LaurentPoly, doteq, evaluate, to_text

DISTINCT_M = range(1, 6)
DISTINCT_N = range(-5, 6)
CROSS_M = range(0, 5)
CROSS_N = range(-4, 5)
INJECTIVITY_BOXES = ((1, 5), (2, 3), (3, 2))
DETERMINANT_M = range(1, 6)
DETERMINANT_N = range(-5, 6)


@dataclass
class VerificationReport:
    suite: str
    cases: int = 0
    failures: list[dict] = field(default_factory=list)
    wall_time_ms: float = 0.0
    details: dict = field(default_factory=dict)
    collision: bool = False
    subreports: list["VerificationReport"] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, case, expected, got) -> None:
        self.failures.append({"case": str(case), "expected": str(expected), "got": str(got)})

    def to_json(self, meta: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.ok,
        }
        if self.details:
            out["details"] = self.details
        if self.subreports:
            out["suites"] = [r.to_json(meta) for r in self.subreports]
        if meta:
            out["wall_time_ms"] = round(self.wall_time_ms, 3)
        return out


def alexander_sanity(poly: LaurentPoly) -> str | None:
    """``None`` if ``poly`` looks like an Alexander polynomial, else the reason."""
    try:
        sym = alx.conway_normalize(poly)
    except alx.NotSymmetrizable as exc:
        return str(exc)
    if evaluate(sym, 1) != 1:
        return f"value {evaluate(sym, 1)} at t = 1"
    if alx.determinant(sym) % 2 == 0:
        return f"even determinant {alx.determinant(sym)}"
    return None


def _sanity(report: VerificationReport, case, poly: LaurentPoly) -> None:
    why = alexander_sanity(poly)
    if why is not None:
        report.fail(f"sanity {case}", "Delta(1) = 1 and odd determinant", why)


def suite_anchors() -> VerificationReport:
    r = VerificationReport("anchors")
    t = LaurentPoly.t()
    trefoil = t - 1 + t**-1
    checks = [(("Delta", 0, 1), alx.delta_closed(0, 1), trefoil)]
    for m in range(1, 6):
        checks.append((("Delta", m, 0), alx.delta_closed(m, 0), alx.torus_delta(2 * m - 1)))
    for case, got, expected in checks:
        r.cases += 1
        _sanity(r, case, got)
        if alx.conway_normalize(got) != alx.conway_normalize(expected):
            r.fail(case, to_text(expected), to_text(got))
    expected_classes = {
        (3, 0): "TorusKnot(2,5)",
        (2, 0): "TorusKnot(2,3)",
        (-1, -1): "Unknot",
        (0, 1): "LeftTrefoil",
    }
    for (m, n), cls in expected_classes.items():
        r.cases += 1
        got = str(tb.classify(m, n))
        if got != cls:
            r.fail(("classify", m, n), cls, got)
    return r


def suite_distinctness(m_range=DISTINCT_M, n_range=DISTINCT_N) -> VerificationReport:
    r = VerificationReport("lemma")
    rep = alx.delta_family_distinct(m_range, n_range)
    r.cases = rep.count
    r.details = {"pairs": rep.pairs_checked, "in_proven_range": rep.in_proven_range}
    for a, b in rep.collisions:
        r.fail((a, b), "distinct up to units", "collision")
        r.collision = True
    for m, n in rep.params:
        _sanity(r, ("Delta", m, n), alx.delta_closed(m, n))
    return r


def _cross_point(pt):
    m, n = pt
    out = []
    closed = alx.delta_closed(m, n)
    cf = tb.family_cf(m, n, verify=False)
    frac = tb.fraction_from_cf(cf)
    seifert = alx.alex_of_cf(cf)
    if not doteq(seifert, closed):
        out.append((pt, "seifert ≐ closed", f"{to_text(seifert)} vs {to_text(closed)}"))
    if frac.p != alx.determinant(closed):
        out.append((pt, f"determinant {alx.determinant(closed)}", frac.p))
    found = tb.search_family_fractions(m, n)
    if not any(tb.equivalent(frac, f, up_to_mirror=True) for f in found):
        out.append((pt, f"{frac} among search results", [str(f) for f in found]))
    by_formula = str(tb.classify(m, n))
    by_fraction = str(tb.classify_fraction(frac))
    if by_formula != by_fraction:
        out.append((pt, by_formula, by_fraction))
    alternates = [str(f) for f in found if not tb.equivalent(frac, f, up_to_mirror=True)]
    return pt, str(cf), str(frac), alternates, seifert, out


def _map(fn, items, jobs):
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def suite_crosscheck(m_range=CROSS_M, n_range=CROSS_N, *, jobs: int = 1) -> VerificationReport:
    """Seifert route against closed forms, plus the fraction search, on a grid."""
    r = VerificationReport("crosscheck")
    pts = tb.grid(m_range, n_range)
    results = _map(_cross_point, pts, jobs)
    family = {}
    alternates = {}
    for pt, cf, frac, alts, seifert, fails in sorted(results):
        r.cases += 1
        family[f"{pt[0]},{pt[1]}"] = {"cf": cf, "fraction": frac}
        if alts:
            alternates[f"{pt[0]},{pt[1]}"] = alts
        _sanity(r, ("seifert", *pt), seifert)
        for case, expected, got in fails:
            r.fail(case, expected, got)
    # the equivalence K(-1, n) = K(0, n + 1), checked on fractions
    for n in range(-4, 5):
        r.cases += 1
        a, b = tb.family_fraction(-1, n), tb.family_fraction(0, n + 1)
        if not tb.equivalent(a, b):
            r.fail(("reduction", n), f"{b}", f"{a}")
        if tb.classify(-1, n) != tb.classify(0, n + 1):
            r.fail(("classify reduction", n), tb.classify(0, n + 1), tb.classify(-1, n))
    r.details = {"family": family, "alternate_classes": alternates}
    return r


def suite_determinant(m_range=DETERMINANT_M, n_range=DETERMINANT_N) -> VerificationReport:
    r = VerificationReport("determinant")
    for m, n in tb.grid(m_range, n_range):
        r.cases += 1
        direct = alx.determinant(alx.delta_closed(m, n))
        formula = abs(8 * n + (4 * n + 1) * (2 * m - 1))
        if direct != formula:
            r.fail(("det", m, n), formula, direct)
    return r


def _injectivity_box(r: VerificationReport, k: int, bound: int, budget: int, jobs: int) -> None:
    rep = con.verify_injectivity(k, bound, budget=budget, jobs=jobs)
    for group in rep.collisions:
        r.fail(("collision", k, bound), "injective", group)
        r.collision = True
    tuples = list(con.box(k, bound))
    sigs = {tup: con.sw_product(k, tup) for tup in tuples}
    base = con.base_signature(k)
    generic = 0
    for tup in tuples:
        r.cases += 1
        sig = sigs[tup]
        _sanity(r, ("product", k, tup), sig.product)
        try:
            got = con.recover_tuple(k, sig.product, bound)
        except con.AmbiguousRecovery as exc:
            r.fail(("recover", k, tup), tup, exc.witnesses)
            r.collision = True
            continue
        except con.NoSolution:
            got = None
        if got != tup:
            r.fail(("recover", k, tup), tup, got)
        if con.distinguishable(sig, base) != any(tup):
            r.fail(("vs base", k, tup), any(tup), not any(tup))
        if all(tup):
            generic += 1
            for p in range(k):
                block = tup[p:]
                trace = con.sigma_extract(k, p, con.block_product(k, p, block))
                want = tuple(
                    con.elementary_symmetric(block, len(block) - j) for j in range(len(trace.sigma))
                )
                if trace.sigma != want or trace.first != tup[p]:
                    r.fail(("sigma", k, p, tup), (want, tup[p]), (trace.sigma, trace.first))
    r.details.setdefault("boxes", []).append(
        {"k": k, "bound": bound, "count": rep.count, "collisions": len(rep.collisions), "generic": generic}
    )


def suite_injectivity(k: int | None = None, bound: int | None = None, *, budget: int = con.DEFAULT_BUDGET, jobs: int = 1) -> VerificationReport:
    """Injectivity, round-trip recovery and the symmetric-function validator."""
    r = VerificationReport("claim")
    if k is None and bound is None:
        boxes = INJECTIVITY_BOXES
    else:
        boxes = ((k or 2, 3 if bound is None else bound),)
    for kk, bb in boxes:
        con.check_budget(kk, bb, budget)
    for kk, bb in boxes:
        _injectivity_box(r, kk, bb, budget, jobs)
    return r


EXPECTED_HOMOLOGY = {
    "s4_witness": hom.connected_sum_homology(0, 0),
    "s4_witness_mixed": hom.connected_sum_homology(0, 0),
    "s4_counts_zero_maps": hom.connected_sum_homology(2, 2),
    "log0_model": hom.connected_sum_homology(1, 1),
    "torsion_h1": hom.HomologyGroups((1, 0, 0, 0, 1), ((), (2,), (), (), ())),
}
EXPECTED_SPHERE = {"s4_witness": True, "s4_witness_mixed": True}


def suite_homology() -> VerificationReport:
    r = VerificationReport("homology")
    for name, cx in sorted(hom.witness_complexes().items()):
        r.cases += 1
        h = hom.homology_of(cx)
        if name in EXPECTED_HOMOLOGY and h != EXPECTED_HOMOLOGY[name]:
            r.fail(name, EXPECTED_HOMOLOGY[name].to_json(), h.to_json())
        sphere = hom.is_homotopy_sphere_homology(h)
        if sphere != EXPECTED_SPHERE.get(name, False):
            r.fail((name, "sphere4"), EXPECTED_SPHERE.get(name, False), sphere)
        if h.euler != hom.euler_characteristic(cx):
            r.fail((name, "euler"), hom.euler_characteristic(cx), h.euler)
    return r


SUITES = ("anchors", "lemma", "crosscheck", "determinant", "claim", "homology")


def run_suite(name: str, *, k=None, bound=None, budget=con.DEFAULT_BUDGET, jobs=1) -> VerificationReport:
    start = time.perf_counter()
    if name == "all":
        subs = [run_suite(s, k=k, bound=bound, budget=budget, jobs=jobs) for s in SUITES]
        r = VerificationReport("all", subreports=subs)
        r.cases = sum(s.cases for s in subs)
        r.failures = [dict(f, suite=s.suite) for s in subs for f in s.failures]
        r.collision = any(s.collision for s in subs)
    elif name == "anchors":
        r = suite_anchors()
    elif name == "lemma":
        r = suite_distinctness()
    elif name == "crosscheck":
        r = suite_crosscheck(jobs=jobs)
    elif name == "determinant":
        r = suite_determinant()
    elif name == "claim":
        r = suite_injectivity(k, bound, budget=budget, jobs=jobs)
    elif name == "homology":
        r = suite_homology()
    else:
        raise ValueError(f"unknown suite {name!r}")
    r.failures.sort(key=lambda f: (f.get("suite", ""), f["case"]))
    r.wall_time_ms = (time.perf_counter() - start) * 1000
    return r
