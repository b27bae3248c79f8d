"""``corkcheck`` command-line front end.

Every command prints a human-readable line (suppressed by ``--json-only``)
followed by one JSON document with sorted keys.  ``--no-meta`` drops
timings so identical flags give byte-identical output.

Exit codes: 0 ok, 1 verification failure, 2 parse error,
3 unsupported parameters, 4 budget exceeded, 5 ambiguity or collision.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import alexander as alx
from . import constellation as con
from . import homology as hom
from . import twobridge as tb
from . import verify as ver
from .laurent import PolyParseError, degree_span, parse, to_json_obj, to_text, unit_normalize

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_BUDGET = 4
EXIT_AMBIGUOUS = 5


class UsageError(ValueError):
    """Bad flag values that argparse itself cannot catch."""


class Output:
    def __init__(self, json_only: bool, meta: bool, stream=None):
        self.json_only = json_only
        self.meta = meta
        self.stream = stream or sys.stdout

    def text(self, line: str) -> None:
        if not self.json_only:
            print(line, file=self.stream)

    def json(self, obj) -> None:
        print(json.dumps(obj, sort_keys=True, ensure_ascii=False), file=self.stream)


def _int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = text.split(",")
        return int(a), int(b)
    except ValueError:
        raise UsageError(f"expected two comma-separated integers, got {text!r}") from None


def _int_list(text: str) -> tuple[int, ...]:
    body = text.strip().strip("()[]")
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _tuple_text(tup) -> str:
    return "(" + ",".join(str(x) for x in tup) + ")"


def _poly_json(p) -> dict:
    """Symmetric form when it exists, otherwise the unit-normal form."""
    try:
        shown = alx.conway_normalize(p)
    except alx.NotSymmetrizable:
        shown = unit_normalize(p).poly
    return {
        "poly": to_json_obj(shown),
        "text": to_text(shown),
        "determinant": alx.determinant(p),
        "degree_span": list(degree_span(shown)),
        "normalized": to_json_obj(unit_normalize(p).poly),
    }


# -- commands --------------------------------------------------------------


def cmd_alex(args, out: Output) -> int:
    if args.family is not None:
        m, n = _int_pair(args.family)
        poly = alx.delta_closed(m, n)
        source = {"family": [m, n]}
    elif args.cf is not None:
        cf = tb.EvenContinuedFraction.parse(args.cf)
        poly = alx.alex_of_cf(cf)
        source = {"cf": list(cf.entries), "fraction": str(tb.fraction_from_cf(cf))}
    elif args.double_twist is not None:
        r, s = _int_pair(args.double_twist)
        cf = tb.double_twist_cf(r, s)
        poly = alx.alex_of_cf(cf)
        source = {"double_twist": [r, s], "cf": list(cf.entries)}
    else:
        cf = tb.twist_knot_cf(args.twist)
        poly = alx.alex_of_cf(cf)
        source = {"twist": args.twist, "cf": list(cf.entries)}
    obj = _poly_json(poly)
    obj["source"] = source
    out.text(obj["text"])
    out.json(obj)
    return EXIT_OK


def cmd_classify(args, out: Output) -> int:
    m, n = _int_pair(args.family)
    cls = tb.classify(m, n)
    frac = tb.family_fraction(m, n)
    out.text(str(cls))
    out.json(
        {
            "family": [m, n],
            "class": str(cls),
            "fraction": str(frac),
            "cf": list(tb.family_cf(m, n).entries),
            "determinant": frac.p,
        }
    )
    return EXIT_OK


def cmd_equiv(args, out: Output) -> int:
    a, b = tb.TwoBridgeFraction.parse(args.a), tb.TwoBridgeFraction.parse(args.b)
    same = tb.equivalent(a, b, up_to_mirror=args.mirror)
    out.text("equivalent" if same else "not equivalent")
    out.json({"a": str(a), "b": str(b), "up_to_mirror": args.mirror, "equivalent": same})
    return EXIT_OK


def cmd_product(args, out: Output) -> int:
    tup = _int_list(args.tuple)
    k = args.k if args.k is not None else len(tup)
    sig = con.sw_product(k, tup)
    out.text(f"{sig.common_factor} * ({to_text(sig.product)})")
    out.json(
        {
            "k": k,
            "tuple": list(tup),
            "common_factor": sig.common_factor,
            "product": to_json_obj(sig.product),
            "text": to_text(sig.product),
            "degree_span": list(degree_span(sig.product)),
        }
    )
    return EXIT_OK


def cmd_recover(args, out: Output) -> int:
    poly = parse(args.poly)
    base = {"k": args.k, "bound": args.bound}
    try:
        tup = con.recover_tuple(args.k, poly, args.bound)
    except con.NoSolution:
        out.text("NoSolution")
        out.json(dict(base, result="NoSolution"))
        return EXIT_OK
    except con.AmbiguousRecovery as exc:
        out.text("Ambiguous " + " ".join(_tuple_text(w) for w in exc.witnesses))
        out.json(dict(base, result="Ambiguous", witnesses=[list(w) for w in exc.witnesses]))
        return EXIT_AMBIGUOUS
    out.text(_tuple_text(tup))
    out.json(dict(base, result="Recovered", tuple=list(tup)))
    return EXIT_OK


def cmd_constellation_verify(args, out: Output) -> int:
    rep = con.verify_injectivity(args.k, args.bound, budget=args.budget, jobs=args.jobs)
    out.text(f"k={rep.k} bound={rep.bound} count={rep.count} collisions={len(rep.collisions)}")
    out.json(rep.to_json(meta=out.meta))
    return EXIT_OK if rep.ok else EXIT_AMBIGUOUS


def cmd_verify(args, out: Output) -> int:
    rep = ver.run_suite(args.suite, k=args.k, bound=args.bound, budget=args.budget, jobs=args.jobs)
    for sub in rep.subreports or [rep]:
        status = "PASS" if sub.ok else "FAIL"
        out.text(f"{status} {sub.suite}: {sub.cases} cases, {len(sub.failures)} failures")
    out.json(rep.to_json(meta=out.meta))
    if rep.ok:
        return EXIT_OK
    return EXIT_AMBIGUOUS if rep.collision else EXIT_FAIL


def cmd_homology(args, out: Output) -> int:
    if args.file:
        cx = hom.load_complex(args.file)
    else:
        complexes = hom.witness_complexes()
        if args.witness not in complexes:
            raise UsageError(f"unknown witness {args.witness!r}; have {sorted(complexes)}")
        cx = complexes[args.witness]
    h = hom.homology_of(cx)
    sphere = hom.is_homotopy_sphere_homology(h)
    out.text(f"betti={list(h.betti)} torsion={[list(t) for t in h.torsion]} sphere4={sphere}")
    out.json(dict(h.to_json(), euler=h.euler, sphere4=sphere))
    return EXIT_OK


def cmd_snf(args, out: Output) -> int:
    try:
        matrix = json.loads(args.matrix) if args.matrix else json.load(open(args.file))
    except json.JSONDecodeError as exc:
        raise UsageError(f"matrix is not valid JSON: {exc}") from None
    if not isinstance(matrix, list) or any(not isinstance(r, list) for r in matrix):
        raise UsageError("matrix must be a list of rows")
    if len({len(r) for r in matrix}) > 1:
        raise UsageError("matrix rows have different lengths")
    d = hom.smith_normal_form(matrix)
    out.text(f"diagonal={d.diagonal}")
    out.json({"S": d.S, "U": d.U, "V": d.V, "diagonal": d.diagonal, "rank": d.rank})
    return EXIT_OK


# -- parser ----------------------------------------------------------------


def _global_flags(suppress: bool) -> argparse.ArgumentParser:
    # the same flags are accepted before or after the subcommand
    p = argparse.ArgumentParser(add_help=False)
    default = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    p.add_argument("--json-only", action="store_true", default=default(False), help="print only the JSON document")
    p.add_argument("--no-meta", action="store_true", default=default(False), help="omit timings from JSON")
    p.add_argument("--jobs", type=int, default=default(os.cpu_count() or 1), help="worker processes (default: all cores)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_flags(suppress=True)
    parser = argparse.ArgumentParser(
        prog="corkcheck",
        description="Exact checks for Alexander polynomials of two-bridge knots and twist-tuple recovery.",
        parents=[_global_flags(suppress=False)],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("alex", parents=[common], help="Alexander polynomial")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--family", metavar="M,N", help="closed form Delta(m, n); use --family=-1,0 for negative m")
    g.add_argument("--cf", metavar="LIST", help='even continued fraction, e.g. "[2,-2]"')
    g.add_argument("--twist", type=int, metavar="K", help="twist knot [2k,-2]")
    g.add_argument("--double-twist", metavar="R,S", help="double twist knot [2r,2s]")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("classify", parents=[common], help="classify K(m, n)")
    p.add_argument("--family", metavar="M,N", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equiv", parents=[common], help="Schubert equivalence of two fractions")
    p.add_argument("a", metavar="P/Q")
    p.add_argument("b", metavar="P/Q")
    p.add_argument("--mirror", action="store_true", help="also identify mirror images")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("product", parents=[common], help="product of Delta(i, n_i)")
    p.add_argument("--tuple", required=True, metavar="N1,N2,...")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_product)

    def add_recover(sp):
        sp.add_argument("--k", type=int, required=True)
        sp.add_argument("--poly", required=True, help="text or JSON polynomial; use --poly=... if it starts with '-'")
        sp.add_argument("--bound", type=int, default=5)
        sp.set_defaults(func=cmd_recover)

    add_recover(sub.add_parser("recover", parents=[common], help="recover the twist tuple from a product"))

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("--suite", choices=ver.SUITES + ("all",), default="all")
    p.add_argument("--k", type=int)
    p.add_argument("--bound", type=int)
    p.add_argument("--budget", type=int, default=con.DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("constellation", parents=[common], help="injectivity check and recovery")
    csub = p.add_subparsers(dest="action", required=True)
    cv = csub.add_parser("verify", parents=[common])
    cv.add_argument("--k", type=int, required=True)
    cv.add_argument("--bound", type=int, required=True)
    cv.add_argument("--budget", type=int, default=con.DEFAULT_BUDGET)
    cv.set_defaults(func=cmd_constellation_verify)
    add_recover(csub.add_parser("recover", parents=[common]))

    p = sub.add_parser("homology", parents=[common], help="homology of a chain complex")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--file", help="chain complex JSON")
    g.add_argument("--witness", help="name of a bundled witness complex")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("snf", parents=[common], help="Smith normal form of an integer matrix")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--matrix", help='JSON rows, e.g. "[[2,4],[6,8]]"')
    g.add_argument("--file")
    p.set_defaults(func=cmd_snf)
    return parser


PARSE_ERRORS = (
    UsageError,
    PolyParseError,
    tb.InvalidFraction,
    tb.InvalidContinuedFraction,
    hom.NotAComplex,
    json.JSONDecodeError,
    OSError,
)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.json_only, not args.no_meta)
    try:
        return args.func(args, out)
    except PARSE_ERRORS as exc:
        print(f"corkcheck: error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except tb.UnsupportedParams as exc:
        print(f"corkcheck: unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except con.BudgetExceeded as exc:
        print(f"corkcheck: budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, con.KMismatch) as exc:
        print(f"corkcheck: error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
