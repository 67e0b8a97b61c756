"""Command-line entry point: ``asymknuth <command> ...``.

Exit codes: 0 success, 2 usage error, 3 brute-force scale guard,
4 internal assertion (inexact division, oracle mismatch).
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import asym, mehta
from .dims import dim_rectangle
from .errors import AsymKnuthError, ScaleError
from .rsk_oracle import count_avoiders_bruteforce, count_involutions
from .sums import error_term, s_exact

EXIT_OK, EXIT_USAGE, EXIT_SCALE, EXIT_ASSERT = 0, 2, 3, 4


class UsageError(AsymKnuthError):
    pass


def _log10(k: int) -> str:
    return repr(math.log10(k)) if k > 0 else "-inf"


def _int_list(text: str) -> list:
    out = []
    for tok in text.split(","):
        v = float(tok)
        if not v.is_integer() or v < 1:
            raise argparse.ArgumentTypeError(f"ladder entries must be positive integers: {tok!r}")
        out.append(int(v))
    return out


def _float_list(text: str) -> list:
    return [float(tok) for tok in text.split(",")]


def _csv_table(header, rows) -> str:
    buf = io.StringIO()
    buf.write(asym.CSV_SCHEMA + "\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _render(records: list, fmt: str, header=("quantity", "value", "log10")) -> str:
    """Render (quantity, int value) pairs as CSV or JSON."""
    if fmt == "json":
        return json.dumps({k: str(v) for k, v in records}) + "\n"
    return _csv_table(header, [(k, str(v), _log10(v)) for k, v in records])


def cmd_exact(args) -> str:
    d, N = args.d, args.N
    S = s_exact(d, N, args.threads)
    records = [("S", S)]
    if N % d == 0 and N > 0:
        n = N // d
        R = dim_rectangle(d, 2 * n)
        E = error_term(d, n, args.threads)
        if S != R + E:
            raise AssertionError(f"S(d,dn) != dim R(d,2n) + E(d,n) at d={d}, n={n}")
        records += [("rectangle", R), ("E", E)]
    return _render(records, args.format)


def cmd_converge(args) -> str:
    dev = None
    if args.kind == "lemma":
        if args.dev is None:
            raise UsageError("--kind lemma needs --dev")
        dev = asym.Deviation(tuple(args.dev))
    rows = asym.convergence_table(args.kind, args.d, args.ladder, beta=args.beta,
                                  alpha=args.alpha, dev=dev, workers=args.threads)
    if args.format == "json":
        return json.dumps([{"n": r.n, "lhs_log": r.lhs, "limit_log": r.limit,
                            "ratio": r.ratio, "abs_err": r.abs_err} for r in rows]) + "\n"
    buf = io.StringIO()
    asym.write_csv(rows, buf)
    return buf.getvalue()


def cmd_mehta(args) -> str:
    d, beta = args.d, args.beta
    report = {
        "d": d,
        "beta": beta,
        "psi_log": mehta.mehta_closed(d, beta),
        "psi": math.exp(mehta.mehta_closed(d, beta)),
        "omega_integral_log": mehta.regev_lemma_rhs(d, beta),
        "omega_integral": math.exp(mehta.regev_lemma_rhs(d, beta)),
        "estimate": None,
        "z": None,
    }
    if d < 2:
        report["note"] = "Monte Carlo skipped: Omega_{d-1} is a point for d < 2"
    else:
        est = mehta.omega_integral_mc(d, beta, args.samples, args.seed, workers=args.threads)
        report["estimate"] = {"mean": est.mean, "std_error": est.std_error,
                              "samples": est.samples, "seed": est.seed}
        report["z"] = est.z_score(report["omega_integral"])
    if args.format == "csv":
        flat = [(k, v) for k, v in report.items() if k != "estimate"]
        if report["estimate"]:
            flat += [(f"estimate_{k}", v) for k, v in report["estimate"].items()]
        return _csv_table(("quantity", "value"), flat)
    return json.dumps(report) + "\n"


def _check(label: str, values: dict, fmt: str) -> str:
    distinct = set(values.values())
    status = "OK" if len(distinct) == 1 else "MISMATCH"
    if fmt == "json":
        text = json.dumps({"check": label, **{k: str(v) for k, v in values.items()},
                           "status": status}) + "\n"
    else:
        text = _csv_table(("check", *values, "status"),
                          [(label, *(str(v) for v in values.values()), status)])
    if status != "OK":
        sys.stdout.write(text)
        raise AssertionError(f"{label}: {values}")
    return text


def cmd_oracle(args) -> str:
    d, N = args.d, args.N
    brute = count_avoiders_bruteforce(d, N, guard=args.guard)
    return _check(f"oracle(d={d},N={N})", {"brute": brute, "formula": s_exact(d, N)}, args.format)


def cmd_involutions(args) -> str:
    d, n = args.d, args.n
    values = {
        "brute": count_involutions(d, n, "bruteforce", guard=args.guard),
        "formula": count_involutions(d, n, "formula"),
        "rectangle": dim_rectangle(d, 2 * n),
    }
    return _check(f"involutions(d={d},n={n})", values, args.format)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default=None)
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes (results do not depend on it)")

    parser = argparse.ArgumentParser(prog="asymknuth",
                                     description="Exact and asymptotic counts of permutations "
                                                 "with no long decreasing subsequence.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", parents=[common], help="S(d,N), dim R(d,2n) and E(d,n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.set_defaults(func=cmd_exact, default_format="csv")

    p = sub.add_parser("converge", parents=[common], help="convergence ladder as CSV")
    p.add_argument("--kind", choices=asym.KINDS, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ladder", type=_int_list, required=True, help="comma-separated n values")
    p.add_argument("--beta", type=float, default=2.0)
    p.add_argument("--alpha", type=float, default=1.0)
    p.add_argument("--dev", type=_float_list, help="comma-separated deviations (kind=lemma)")
    p.set_defaults(func=cmd_converge, default_format="csv")

    p = sub.add_parser("mehta", parents=[common], help="Mehta integral: closed form vs Monte Carlo")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_mehta, default_format="json")

    p = sub.add_parser("oracle", parents=[common], help="brute-force avoider count vs RSK sum")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--guard", type=int, default=9)
    p.set_defaults(func=cmd_oracle, default_format="csv")

    p = sub.add_parser("involutions", parents=[common], help="Theorem-3 involution count")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--guard", type=int, default=10)
    p.set_defaults(func=cmd_involutions, default_format="csv")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    for name in ("d", "N", "n"):
        value = getattr(args, name, None)
        if value is not None and value < (0 if name == "N" else 1):
            parser.error(f"--{name} out of range: {value}")
    try:
        text = args.func(args)
    except ScaleError as exc:
        print(f"scale guard: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except AssertionError as exc:
        print(f"assertion failed: {exc}", file=sys.stderr)
        return EXIT_ASSERT
    except (AsymKnuthError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
