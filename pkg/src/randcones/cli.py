"""Command-line front end: run experiments, list the registry, print tables.

Exit codes: 0 all verdicts pass, 1 statistical failure, 2 usage error,
3 enumeration budget exceeded.
"""

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .errors import BudgetExceededError, InvalidInputError, RandConesError
from .exact import expected_face_count, expected_intrinsic_volumes, wendel_p
from .angles import moment_m, moment_m_exact, sylvester_simplex_probability
from .exact import d2_vertex_distribution
from .experiments import REGISTRY, run_experiment
from .spectral import funk_hecke

EXIT_PASS = 0
EXIT_STAT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

TABLE_NAMES = ("wendel", "expected-f", "intrinsic-volumes", "spectra", "moments", "sylvester")


def _parse_value(text: str):
    for conv in (int, float):
        try:
            return conv(text)
        except ValueError:
            pass
    if "," in text:
        return [_parse_value(part) for part in text.split(",") if part]
    return text


def _parse_params(pairs):
    params = {}
    for item in pairs or []:
        if "=" not in item:
            raise InvalidInputError(f"--param expects key=value, got {item!r}")
        key, _, value = item.partition("=")
        params[key] = _parse_value(value)
    return params


def _format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator} = {float(x):.10g}"


def cmd_run(args) -> int:
    params = _parse_params(args.param)
    if args.reps is not None:
        params["reps"] = args.reps
    if args.r_max is not None:
        params["r_max"] = args.r_max
    try:
        result = run_experiment(
            args.id, params=params, seed=args.seed,
            threads=args.threads if args.threads else None,
        )
    except KeyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceededError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InvalidInputError, TypeError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    exp = REGISTRY[args.id]
    if exp.exploratory:
        print(f"[exploratory] {args.id}: output is non-asserted")
    for line in result.info:
        print(line)
    for e in result.estimates:
        print(f"  estimate {e.name} = {e.value:.6g} (stderr {e.stderr:.3g})")
    for v in result.verdicts:
        status = "PASS" if v.report.passed else "FAIL"
        print(f"  [{status}] {v.name}: {v.report.description}")
    print(f"{args.id}: wall time {result.wall_time_s:.2f}s")

    if args.out:
        _write_result(result, args.out, args.format)
        print(f"wrote {args.out}")
    return EXIT_PASS if result.all_pass else EXIT_STAT_FAIL


def _write_result(result, path: str, fmt: str) -> None:
    if fmt == "json":
        payload = json.dumps(result.to_json_dict(), indent=2, sort_keys=True)
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(payload + "\n")
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "name", "value", "stderr", "target", "provenance", "pass"])
        writer.writerows(result.to_csv_rows())
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(buf.getvalue())


def cmd_list(args) -> int:
    width = max(len(k) for k in REGISTRY)
    for exp_id in sorted(REGISTRY):
        exp = REGISTRY[exp_id]
        flag = "  [non-asserted]" if exp.exploratory else ""
        print(f"{exp_id:<{width}}  {exp.claim}{flag}")
        print(f"{'':<{width}}  defaults: {exp.defaults}")
    return EXIT_PASS


def _table_rows(name: str, args):
    if name == "wendel":
        rows = [("n", "d", "p(n,d)")]
        for n in range(2, args.n_max + 1):
            for d in range(1, n):
                rows.append((n, d, _format_rational(wendel_p(n, d))))
        return rows
    if name == "expected-f":
        n, d = args.n, args.d
        rows = [("ell", "E f_ell")]
        for ell in range(d):
            rows.append((ell, _format_rational(expected_face_count(n, d, ell))))
        return rows
    if name == "intrinsic-volumes":
        rows = [("k", "E v_k")]
        for k, v in enumerate(expected_intrinsic_volumes(args.n, args.d)):
            rows.append((k, _format_rational(v)))
        return rows
    if name == "spectra":
        seq = funk_hecke(args.k, args.r_max)
        rows = [("r", "dim", "tau", "lambda")]
        for r, dim, tau, lam in seq.entries:
            rows.append((int(r), int(dim), f"{tau:.12g}", f"{lam:.12g}"))
        return rows
    if name == "moments":
        d = args.d
        rows = [("k", "m(d,k)")]
        rows.append((1, _format_rational(moment_m_exact(d, 1))))
        rows.append((2, _format_rational(moment_m_exact(d, 2))))
        rows.append((3, f"{moment_m(d, 3):.12g}"))
        return rows
    if name == "sylvester":
        d = args.d
        rows = [("quantity", "value")]
        for k in (1, 2, 3):
            rows.append((f"simplex-prob(n=d+{k})", f"{sylvester_simplex_probability(d, k):.12g}"))
        labels = ("full-sphere", "simplex", "d+1-vertices", "d+2-vertices")
        for lab, v in zip(labels, d2_vertex_distribution(d)):
            rows.append((f"vertex-law {lab}", _format_rational(v)))
        return rows
    raise InvalidInputError(f"unknown table {name!r}")


def cmd_table(args) -> int:
    if args.name not in TABLE_NAMES:
        print(f"usage error: unknown table {args.name!r}; choose from {TABLE_NAMES}", file=sys.stderr)
        return EXIT_USAGE
    try:
        rows = _table_rows(args.name, args)
    except (InvalidInputError, RandConesError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerows(rows)
    else:
        for row in rows:
            print("  ".join(str(c) for c in row))
    return EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randcones",
        description="Exact formulas and Monte Carlo verification for random polyhedral cones",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run a registered experiment")
    p_run.add_argument("id", help="experiment id (see `randcones list`)")
    p_run.add_argument("--seed", type=int, default=0)
    p_run.add_argument("--reps", type=int, default=None)
    p_run.add_argument("--threads", type=int, default=0,
                       help="worker processes; default from RANDCONES_THREADS or 1")
    p_run.add_argument("--out", default=None, help="write a result file")
    p_run.add_argument("--format", choices=("json", "csv"), default="json")
    p_run.add_argument("--r-max", dest="r_max", type=int, default=None)
    p_run.add_argument("--alpha", type=float, default=None,
                       help="reserved; the per-test level is fixed at 0.001")
    p_run.add_argument("--param", action="append", metavar="KEY=VALUE",
                       help="override an experiment parameter (repeatable)")
    p_run.set_defaults(func=cmd_run)

    p_list = sub.add_parser("list", help="list registered experiments")
    p_list.set_defaults(func=cmd_list)

    p_table = sub.add_parser("table", help="print an exact or spectral table")
    p_table.add_argument("name", help=f"one of {', '.join(TABLE_NAMES)}")
    p_table.add_argument("--n-max", dest="n_max", type=int, default=8)
    p_table.add_argument("--n", type=int, default=6)
    p_table.add_argument("--d", type=int, default=3)
    p_table.add_argument("--k", type=int, default=2)
    p_table.add_argument("--r-max", dest="r_max", type=int, default=9)
    p_table.add_argument("--format", choices=("text", "csv"), default="text")
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_PASS
    code = args.func(args)
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
