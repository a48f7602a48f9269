"""Command-line front end.

Exit codes: 0 success, 1 usage/I/O/parse errors, 2 a check ran but
disagreed (formula vs oracle, prediction vs direct count, Walsh mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import combinatorics as comb
from .classifier import classify, classify_real, is_hadamard
from .core import SequencyError, profile
from .formats import dumps_csv, dumps_pbm, dumps_sgn, load_sgn
from .generators import (
    WALSH_SEQUENCY_8,
    GeneratorKind,
    generate,
    sort_by_sequency,
    walsh_natural,
    walsh_sequency,
)
from .tensor import (
    MATERIALIZE_LIMIT,
    FactorSummary,
    MixedRadixIndex,
    direct_sequencies,
    kronecker,
    predict_nfold,
    predict_pair,
    sample_columns,
)

EXIT_OK, EXIT_ERROR, EXIT_DISAGREE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _emit_json(obj, out) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _fraction_str(x: Fraction) -> str:
    num = comb.decimal_string(x.numerator)
    return num if x.denominator == 1 else f"{num}/{comb.decimal_string(x.denominator)}"


def cmd_generate(args, out) -> int:
    a = generate(GeneratorKind.parse(args.kind), args.n)
    if args.format == "text":
        out.write(dumps_sgn(a))
    elif args.format == "csv":
        out.write(dumps_csv(a))
    elif args.format == "pbm":
        out.write(dumps_pbm(a))
    else:
        _emit_json(
            {
                "kind": args.kind,
                "n": a.n,
                "rows": a.rows(),
                "profile": profile(a).to_list(),
                "orthogonal": is_hadamard(a),
            },
            out,
        )
    return EXIT_OK


def _read_real(path) -> list[list[float]]:
    rows = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            fields = line.replace(",", " ").split()
            if not fields:
                continue
            try:
                rows.append([float(x) for x in fields])
            except ValueError as exc:
                raise SequencyError(f"line {lineno}: {exc}") from None
    return rows


def cmd_classify(args, out) -> int:
    if args.real:
        m = _read_real(args.input)
        result = classify_real(m)
        orth = None
    else:
        a = load_sgn(args.input)
        result = classify(a)
        orth = is_hadamard(a)
    report = result.to_dict()
    if orth is not None:
        report["orthogonal"] = orth
    if args.format == "text":
        out.write(
            f"n={result.n} complete={str(result.complete).lower()} "
            f"ordered={str(result.ordered).lower()} profile={result.profile.to_list()}\n"
        )
        for s, cols in result.duplicate_sequencies:
            out.write(f"  sequency {s}: columns {list(cols)}\n")
    else:
        _emit_json(report, out)
    return EXIT_OK


def cmd_count(args, out) -> int:
    n = args.n
    if args.what == "grid-check":
        g = comb.grid_identity_check(n)
        report = {
            "n": n,
            "what": "grid-check",
            "lhs": comb.decimal_string(g.lhs),
            "rhs": _fraction_str(g.rhs),
            "agree": g.agree,
        }
        reports = [report]
        status = EXIT_OK if g.agree else EXIT_DISAGREE
    else:
        if args.what == "per-sequency":
            results = comb.per_sequency_counts(n, oracle=args.oracle)
        else:
            fn = {
                "ordered": comb.count_sequency_ordered,
                "complete": comb.count_sequency_complete,
                "chains": comb.count_maximal_chains,
            }[args.what]
            results = [fn(n, oracle=args.oracle)]
        reports = [r.to_dict() for r in results]
        status = EXIT_DISAGREE if any(r.agree is False for r in results) else EXIT_OK
    if args.format == "text":
        for r in reports:
            out.write(" ".join(f"{k}={_text_value(v)}" for k, v in r.items()) + "\n")
    else:
        _emit_json(reports[0] if len(reports) == 1 else reports, out)
    return status


def _text_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return str(v).lower()
    return str(v)


def cmd_tensor(args, out) -> int:
    a = load_sgn(args.a)
    if args.b is not None:
        if args.power is not None:
            raise UsageError("--power cannot be combined with --b")
        factors = [a, load_sgn(args.b)]
    else:
        power = 2 if args.power is None else args.power
        if power < 1:
            raise UsageError("--power must be >= 1")
        factors = [a] * power

    radices = tuple(f.n for f in factors)
    total = 1
    for q in radices:
        total *= q

    if args.mode == "expand" and args.format == "text":
        if total * total > MATERIALIZE_LIMIT:
            raise SequencyError(
                f"product has {total * total} entries; text expansion is limited to {MATERIALIZE_LIMIT}"
            )
        prod = factors[0]
        for f in factors[1:]:
            prod = kronecker(prod, f)
        out.write(dumps_sgn(prod))
        return EXIT_OK

    if args.sample is not None:
        columns = sample_columns(total, args.sample, args.seed)
    elif total * total > MATERIALIZE_LIMIT:
        columns = sample_columns(total, 64, args.seed)
    else:
        columns = list(range(total))

    predicted = actual = None
    if args.mode in ("predict", "verify"):
        summaries = [FactorSummary.from_matrix(f) for f in factors]
        if len(factors) == 2 and args.b is not None:
            predicted = {
                c: predict_pair(summaries[0], summaries[1], *MixedRadixIndex.from_value(c, radices).digits)
                for c in columns
            }
        else:
            predicted = {
                c: predict_nfold(summaries[0], MixedRadixIndex.from_value(c, radices))
                for c in columns
            }
    if args.mode in ("expand", "verify"):
        actual = direct_sequencies(factors, columns)

    rows = []
    for c in columns:
        row = {"index": c, "digits": list(MixedRadixIndex.from_value(c, radices).digits)}
        if predicted is not None:
            row["predicted"] = predicted[c]
        if actual is not None:
            row["actual"] = actual[c]
        if predicted is not None and actual is not None:
            row["agree"] = predicted[c] == actual[c]
        rows.append(row)

    all_agree = all(r.get("agree", True) for r in rows)
    report = {
        "mode": args.mode,
        "radices": list(radices),
        "size": total,
        "sampled": len(columns) < total,
        "columns": rows,
    }
    if args.mode == "verify":
        report["all_agree"] = all_agree
    if args.format == "text":
        for r in rows:
            out.write(" ".join(f"{k}={_text_value(v)}" for k, v in r.items()) + "\n")
    else:
        _emit_json(report, out)
    return EXIT_OK if all_agree else EXIT_DISAGREE


def cmd_walsh_check(args, out) -> int:
    n = args.n
    seq = walsh_sequency(n)
    nat = walsh_natural(n)
    sorted_match = sort_by_sequency(nat) == seq
    golden_match = None
    if n == 8:
        golden_match = seq == WALSH_SEQUENCY_8
    ok = sorted_match and golden_match is not False
    if args.format == "json":
        _emit_json(
            {"n": n, "sorted_natural_match": sorted_match, "golden_match": golden_match, "match": ok},
            out,
        )
    else:
        out.write("match\n" if ok else "mismatch\n")
    return EXIT_OK if ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sequency", description="Sequency analysis of sign matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("generate", help="emit a generated sign matrix")
    p.add_argument("--kind", required=True, choices=[k.cli_name for k in GeneratorKind])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv", "pbm"], default="text")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("classify", help="classify a matrix file")
    p.add_argument("--input", required=True)
    p.add_argument("--real", action="store_true", help="input holds real numbers, one row per line")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("count", help="exact counts, optionally checked by brute force")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--what", required=True, choices=["ordered", "complete", "chains", "per-sequency", "grid-check"]
    )
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("tensor", help="sequencies of Kronecker product columns")
    p.add_argument("--a", required=True)
    p.add_argument("--b")
    p.add_argument("--power", type=int)
    p.add_argument("--mode", required=True, choices=["predict", "expand", "verify"])
    p.add_argument("--sample", type=int, help="check only this many seeded random columns")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("walsh-check", help="compare sampled Walsh functions with sorted H2 powers")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_walsh_check)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
    except (SequencyError, OSError) as exc:
        err.write(f"error: {exc}\n")
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
