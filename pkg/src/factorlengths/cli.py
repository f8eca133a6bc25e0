"""Command-line front end with stable, scriptable output.

JSON goes to standard output for report-style subcommands; the data-export
subcommands (histogram, model, sweep) emit their documented CSV formats.
Exact values are serialized as fraction strings; decimal columns exist only
for plotting.  Exit codes: 0 success, 1 a verification reported a failure,
2 usage or validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import asymptotics, constructions, experiments, factorization, invariants
from .exactnum import parse_rational
from .semigroup import (
    InvalidGenerators,
    NotInSemigroup,
    Semigroup,
    parse_semigroup,
    semigroup_to_json,
)


def _decimal(x) -> str:
    return format(float(x), ".12g")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[tuple]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _cmd_invariants(args) -> int:
    S = parse_semigroup(args.semigroup)
    report = invariants.invariant_report(S, args.n)
    _emit(_json_text(report.to_json()), args.out)
    return 0


def _cmd_histogram(args) -> int:
    S = parse_semigroup(args.semigroup)
    ms = factorization.length_multiset(S, args.n)
    rows = factorization.histogram_rows(ms, include_zeros=args.include_zeros)
    _emit(_csv_text(["length", "multiplicity"], rows), args.out)
    return 0


def _cmd_asymptotics(args) -> int:
    S = parse_semigroup(args.semigroup)
    constants = asymptotics.asymptotic_constants(S)
    _emit(_json_text(constants.to_json(asymptotics.fulcrum(S))), args.out)
    return 0


def _cmd_model(args) -> int:
    S = parse_semigroup(args.semigroup)
    hist = asymptotics.normalized_histogram(S, args.k)
    model = asymptotics.triangular_model(hist.fulcrum)
    rows = [
        (_decimal(step.midpoint), _decimal(step.density), _decimal(model.density(step.midpoint)))
        for step in hist.steps
    ]
    _emit(_csv_text(["x", "empirical", "model"], rows), args.out)
    return 0


def _constants_payload(S: Semigroup) -> dict:
    constants = asymptotics.asymptotic_constants(S)
    payload = constants.to_json(asymptotics.fulcrum(S))
    payload["is_median_rational"] = constants.is_median_rational
    return payload


def _cmd_construct(args) -> int:
    if args.family == "pythagorean":
        S = constructions.pythagorean_semigroup(args.a, args.b, args.c)
        payload = {"semigroup": semigroup_to_json(S), "constants": _constants_payload(S)}
    elif args.t_max is not None:
        accepted = constructions.find_sqrt_d_params(args.d, args.t_max)
        payload = {
            "d": args.d,
            "t_max": args.t_max,
            "accepted_t": accepted,
            "semigroups": [
                semigroup_to_json(constructions.sqrt_d_semigroup(args.d, t))
                for t in accepted
            ],
        }
    elif args.t is None:
        raise ValueError("construct sqrtd needs either t or --t-max")
    else:
        result = constructions.sqrt_d_semigroup(args.d, args.t)
        if isinstance(result, constructions.ConstructionRejection):
            payload = {
                "rejected": True,
                "reason": result.reason,
                "detail": result.detail,
                "floor_value": result.floor_value,
            }
        else:
            payload = {
                "semigroup": semigroup_to_json(result),
                "constants": _constants_payload(result),
            }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_egyptian(args) -> int:
    target = parse_rational(args.target)
    if args.all_3:
        sols = constructions.three_unit_fractions(target, distinct=True)
        payload = {"target": str(target), "three_term_solutions": [list(s) for s in sols]}
    else:
        decomposition = constructions.unit_fraction_decomposition(target, args.terms)
        payload = {
            "target": str(target),
            "max_terms": args.terms,
            "decomposition": list(decomposition) if decomposition else None,
        }
    _emit(_json_text(payload), args.out)
    return 0


def _cmd_sweep(args) -> int:
    S = parse_semigroup(args.semigroup)
    if args.points:
        points = [int(p) for p in args.points.split(",")]
    else:
        points = experiments.default_grid(S)
    result = experiments.convergence_sweep(S, points, jobs=args.jobs)
    header = ["n", "mean_ratio", "median_ratio", "mean_err", "median_err"]
    rows = [
        (r.n, str(r.mean_ratio), str(r.median_ratio), _decimal(r.mean_err), _decimal(r.median_err))
        for r in result.rows
    ]
    _emit(_csv_text(header, rows), args.out)
    return 0


def _cmd_verify(args) -> int:
    S = parse_semigroup(args.semigroup)
    if args.check == "mode":
        report = experiments.verify_mode_theorem(S, args.n_max)
        _emit(_json_text(report.to_json()), args.out)
        return 0 if report.ok else 1
    if args.check == "structure":
        lo = args.lo if args.lo is not None else 4 * S.gens[-1] ** 2
        hi = args.hi if args.hi is not None else lo + 4 * experiments.trade_data(S).element
        report = experiments.verify_structure_theorem(S, lo, hi)
        _emit(_json_text(report.to_json()), args.out)
        return 0 if report.ok else 1
    verdict = experiments.probe_median_quasilinearity(
        S,
        periods=[args.period] if args.period else None,
        start=args.start,
        max_checks=args.max_checks,
    )
    _emit(_json_text(verdict.to_json()), args.out)
    return 0


def _cmd_histo4(args) -> int:
    S = parse_semigroup(args.semigroup)
    exploration = experiments.multi_generator_histogram(S, args.n)
    if args.csv:
        rows = factorization.histogram_rows(exploration.multiset)
        _emit(_csv_text(["length", "multiplicity"], rows), args.out)
    else:
        _emit(_json_text(exploration.to_json()), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")

    sg = argparse.ArgumentParser(add_help=False, parents=[common])
    sg.add_argument("-s", "--semigroup", required=True, metavar="LIST",
                    help="comma-separated generators, e.g. 6,9,20")

    parser = argparse.ArgumentParser(
        prog="factorlengths",
        description="Exact factorization-length distributions of numerical semigroups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[sg], help="length statistics of one element")
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("histogram", parents=[sg], help="length,multiplicity CSV of one element")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--include-zeros", action="store_true",
                   help="emit every length between the extremes, including zeros")
    p.set_defaults(func=_cmd_histogram)

    p = sub.add_parser("asymptotics", parents=[sg], help="closed-form asymptotic constants")
    p.set_defaults(func=_cmd_asymptotics)

    p = sub.add_parser("model", parents=[sg],
                       help="normalized histogram vs triangular model, CSV x,empirical,model")
    p.add_argument("-k", type=int, default=1, help="multiple of the distinguished scale")
    p.set_defaults(func=_cmd_model)

    p = sub.add_parser("construct", parents=[common],
                       help="semigroup families with prescribed median arithmetic")
    fam = p.add_subparsers(dest="family", required=True)
    fp = fam.add_parser("pythagorean", parents=[common])
    fp.add_argument("a", type=int)
    fp.add_argument("b", type=int)
    fp.add_argument("c", type=int)
    fp.set_defaults(func=_cmd_construct, family="pythagorean")
    fs = fam.add_parser("sqrtd", parents=[common])
    fs.add_argument("d", type=int)
    fs.add_argument("t", type=int, nargs="?")
    fs.add_argument("--t-max", type=int, help="scan all t up to this bound instead")
    fs.set_defaults(func=_cmd_construct, family="sqrtd")

    p = sub.add_parser("egyptian", parents=[common], help="unit-fraction decompositions")
    p.add_argument("target", help="rational target like 8/11")
    p.add_argument("--terms", type=int, default=4, help="maximum number of terms")
    p.add_argument("--all-3", action="store_true", help="list all 3-term solutions")
    p.set_defaults(func=_cmd_egyptian)

    p = sub.add_parser("sweep", parents=[sg], help="convergence of mean/median ratios, CSV")
    p.add_argument("--points", help="comma-separated elements (default: geometric grid)")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (same output bytes)")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify", parents=[sg], help="run one empirical verifier")
    p.add_argument("check", choices=["mode", "structure", "quasilinear"])
    p.add_argument("--n-max", type=int, default=2000, help="mode check: largest n")
    p.add_argument("--lo", type=int, help="structure check: window start")
    p.add_argument("--hi", type=int, help="structure check: window end")
    p.add_argument("--period", type=int, help="quasilinear probe: test only this period")
    p.add_argument("--start", type=int, help="quasilinear probe: window start")
    p.add_argument("--max-checks", type=int, default=4000)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("histo4", parents=[sg],
                       help="many-generator histogram with inflection scan")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--csv", action="store_true", help="emit histogram CSV instead of JSON")
    p.set_defaults(func=_cmd_histo4)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidGenerators, NotInSemigroup, invariants.EmptyMultisetError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except factorization.EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
