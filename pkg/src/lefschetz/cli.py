"""Command-line front end.

Exit status is 0 when everything requested passed, 1 when a verification
failed and 2 for bad usage or parameters the objects reject.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import plane_partitions as pp
from . import rings, schur, suites
from . import snf_theorems as st
from .linalg import CapacityError, DimensionError, ExactMatrix, snf
from .reports import VerificationReport, dump_reports

SEED_ENV = "LEFSCHETZ_SEED"


class UsageError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return suites.DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


def parse_shape(text: str) -> schur.SkewShape:
    """'5,3/1' or '5,3' -> SkewShape."""
    outer, _, inner = text.partition("/")
    try:
        lam = [int(v) for v in outer.split(",") if v.strip()]
        mu = [int(v) for v in inner.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"cannot parse shape {text!r}") from None
    return schur.SkewShape(lam, mu)


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--output", "-o", help="write to this file instead of stdout")
    p.add_argument("--seed", type=int, default=None, help=f"random seed (default ${SEED_ENV} or {suites.DEFAULT_SEED})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lefschetz", description="Smith forms of up-maps, Toeplitz minors and plane partitions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert", help="Hilbert function of k[x1..xn]/(x1^A1, ...)")
    p.add_argument("caps", type=int, nargs="+")
    _common(p)

    p = sub.add_parser("upmap", help="matrix of multiplication by the sum of the variables")
    p.add_argument("caps", type=int, nargs="+")
    p.add_argument("-r", type=int, required=True)
    _common(p)

    p = sub.add_parser("snf", help="Smith normal form")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--upmap", type=int, nargs="+", metavar="N", help="CAPS... R: the up-map U_R")
    src.add_argument("--mr", type=int, nargs=4, metavar=("A", "B", "C", "R"), help="the reduced matrix M_R(A,B,C)")
    src.add_argument("--file", help="matrix JSON file ('-' for stdin)")
    p.add_argument("--nonunits", action="store_true", help="print only entries other than 1")
    _common(p)

    p = sub.add_parser("count", help="count plane partitions in a symmetry class")
    p.add_argument("cls", metavar="CLASS", help="pp, spp, cspp, tspp, scpp, tcpp, sscpp, cstcpp, csscpp, tsscpp or 1..10")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.add_argument("--method", choices=("det", "perm", "brute", "formula"), default="det")
    _common(p)

    p = sub.add_parser("schur", help="skew Schur polynomial tools")
    ssub = p.add_subparsers(dest="schur_command", required=True)
    q = ssub.add_parser("expand", help="Littlewood-Richardson expansion and Jacobi-Trudi polynomial")
    q.add_argument("shape", help="e.g. 5,3/1")
    _common(q)
    q = ssub.add_parser("legal", help="is the shape a k x k minor of A_c?")
    q.add_argument("shape")
    q.add_argument("-c", type=int, required=True)
    q.add_argument("-n", type=int, required=True)
    _common(q)
    q = ssub.add_parser("decompose", help="write S_nu through (k,c)-legal shapes")
    q.add_argument("shape")
    q.add_argument("-c", type=int, required=True)
    q.add_argument("-n", type=int, required=True)
    _common(q)

    p = sub.add_parser("verify", help="verify one theorem instance")
    vsub = p.add_subparsers(dest="verify_command", required=True)
    q = vsub.add_parser("thm1", help="Smith forms of U_r against M_r")
    q.add_argument("--part", choices=("i", "ii", "iii"), required=True)
    q.add_argument("--caps", type=int, nargs=3, required=True)
    _common(q)
    q = vsub.add_parser("toeplitz", help="k-th Smith entry of A_c is independent of c")
    q.add_argument("--h", type=int, nargs="+", help="h_1..h_n (random if omitted)")
    q.add_argument("--trials", type=int, default=1)
    _common(q)
    q = vsub.add_parser("bijection", help="matchings <-> plane partitions")
    q.add_argument("--box", type=int, nargs=3, required=True)
    _common(q)
    q = vsub.add_parser("det", help="restricted determinant against a class count")
    q.add_argument("--box", type=int, nargs=3, required=True)
    q.add_argument("--class", dest="cls", default="pp")
    _common(q)

    p = sub.add_parser("grid", help="run a named sweep")
    p.add_argument("suite", choices=sorted(suites.SUITES))
    p.add_argument("--trials", type=int, default=100)
    _common(p)
    return parser


def _emit(text: str, args) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _value(obj, args, text: str | None = None) -> None:
    """Plain values: JSON as-is, text as given, CSV as a single column."""
    if args.format == "json":
        _emit(json.dumps(obj, sort_keys=True), args)
    elif args.format == "csv":
        rows = obj if isinstance(obj, list) else [obj]
        _emit("\n".join(json.dumps(r) if not isinstance(r, str) else f'"{r}"' for r in rows), args)
    else:
        _emit(text if text is not None else str(obj), args)


def _reports(reports: list[VerificationReport], args) -> int:
    _emit(dump_reports(reports, args.format), args)
    return 0 if all(r.passed for r in reports) else 1


def _tuple_text(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def dispatch(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        args.seed = _default_seed()
    cmd = args.command

    if cmd == "hilbert":
        h = rings.hilbert_function(args.caps)
        _value([str(v) for v in h], args, _tuple_text(h))
        return 0

    if cmd == "upmap":
        out = rings.labelled_up_map(args.caps, args.r)
        if args.format == "json":
            _emit(json.dumps(out, sort_keys=True), args)
        else:
            m = ExactMatrix.from_json(out)
            labels = [rings.monomial_str(tuple(v)) for v in out["col_labels"]]
            lines = [("," if args.format == "csv" else " ").join([""] + labels)]
            for lab, row in zip(out["row_labels"], m.to_rows()):
                sep = "," if args.format == "csv" else " "
                lines.append(sep.join([rings.monomial_str(tuple(lab))] + [str(v) for v in row]))
            _emit("\n".join(lines), args)
        return 0

    if cmd == "snf":
        if args.upmap:
            if len(args.upmap) < 2:
                raise UsageError("--upmap needs CAPS... R")
            mat = rings.up_map_matrix(args.upmap[:-1], args.upmap[-1])
        elif args.mr:
            mat = st.build_mr(*args.mr)
        else:
            fh = sys.stdin if args.file == "-" else open(args.file)
            with fh:
                mat = ExactMatrix.from_json(fh.read())
        res = snf(mat)
        ent = res.non_units if args.nonunits else res.entries
        _value([str(v) for v in ent], args, _tuple_text(ent))
        return 0

    if cmd == "count":
        n = pp.count(args.cls, (args.a, args.b, args.c), args.method)
        _value(str(n), args, str(n))
        return 0

    if cmd == "schur":
        shape = parse_shape(args.shape)
        if args.schur_command == "expand":
            exp = sorted(schur.lr_expand(shape).items(), reverse=True)
            poly = schur.jacobi_trudi(shape)
            if args.format == "json":
                _emit(json.dumps({"shape": shape.to_json(), "expansion": [{"partition": list(p), "multiplicity": m} for p, m in exp],
                                  "jacobi_trudi": poly.to_json()}, sort_keys=True), args)
            else:
                terms = " + ".join(f"{m}*S{p}" if m != 1 else f"S{p}" for p, m in exp) or "0"
                _emit(f"S{shape} = {terms}\nS{shape} = {poly!r}", args)
            return 0
        if args.schur_command == "legal":
            conds = schur.legality_conditions(shape, shape.k, args.c, args.n)
            ok = schur.is_legal(shape, shape.k, args.c, args.n)
            payload = {"shape": shape.to_json(), "k": shape.k, "c": args.c, "n": args.n, "legal": ok, "conditions": conds}
            if ok:
                rows, cols = schur.minor_for_shape(shape, args.c, args.n)
                payload["minor"] = {"rows": rows, "cols": cols}
            if args.format == "json":
                _emit(json.dumps(payload, sort_keys=True), args)
            else:
                text = f"{shape} is {'' if ok else 'not '}({shape.k},{args.c})-legal for n={args.n}"
                if ok:
                    text += f"; rows {payload['minor']['rows']}, cols {payload['minor']['cols']} of A_{args.c}"
                _emit(text, args)
            return 0
        combo = schur.inverse_lr_decompose(shape.outer, shape.k, args.c, args.n)
        items = sorted(combo.items(), key=lambda kv: (kv[0].outer, kv[0].inner), reverse=True)
        if args.format == "json":
            _emit(json.dumps([{"shape": s.to_json(), "coeff": str(v)} for s, v in items], sort_keys=True), args)
        else:
            _emit(f"S{shape} = " + " ".join(f"{'+' if v > 0 else '-'} {abs(v)}*S{s}" for s, v in items), args)
        return 0

    if cmd == "verify":
        vc = args.verify_command
        if vc == "thm1":
            return _reports([st.verify_snf_theorem(args.part, args.caps)], args)
        if vc == "toeplitz":
            if args.h:
                return _reports([schur.verify_toeplitz_lemma(args.h)], args)
            return _reports(schur.random_toeplitz_trials(args.trials, args.seed), args)
        if vc == "bijection":
            return _reports([suites.verify_bijection(tuple(args.box))], args)
        return _reports([pp.verify_det_identity(tuple(args.box), args.cls)], args)

    if cmd == "grid":
        return _reports(suites.run_suite(args.suite, args.seed, args.trials), args)

    raise UsageError(f"unknown command {cmd}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        return dispatch(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else 2
    except (UsageError, ValueError, DimensionError, CapacityError, rings.ConstraintError, OSError) as exc:
        print(f"lefschetz: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
