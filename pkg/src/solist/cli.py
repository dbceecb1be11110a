"""Command-line surface.

Subcommands: simulate a policy on a sequence, evaluate a cost formula,
verify formulas against simulation on a grid, export mtf-vs-trans
comparison data as CSV, and scan for the crossover point.

Exit codes: 0 success (verify: all cells match), 1 verification
mismatches, 2 parameter error, 3 malformed or unreadable input file.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from typing import Sequence

from .closed_form import Algorithm, as_algorithm, as_family, predict
from .errors import InvalidParameterError, ItemNotInListError, ParseError, SolistError
from .harness import crossover, verify_grid
from .list_core import CostModel, ListState
from .policies import make_policy, serve
from .seqgen import Family, gen_t1, gen_t2, parse_list_file, parse_sequence_file

__all__ = ["main", "run", "build_parser"]

_FAMILY_BY_FLAG = {"t1": Family.T1, "t2": Family.T2}
_GEN_BY_FAMILY = {Family.T1: gen_t1, Family.T2: gen_t2}

COMPARE_HEADER = ["n", "k", "family", "mtf_cost", "trans_cost"]
VERIFY_HEADER = ["algo", "family", "n", "k", "simulated", "predicted", "match"]

_GNUPLOT_TEMPLATE = """\
# Plot total access cost against k from a compare CSV export.
set datafile separator ","
set xlabel "k (repetitions)"
set ylabel "total access cost"
set key left top
plot "{csv}" every ::1 using 2:4 with linespoints title "mtf", \\
     "{csv}" every ::1 using 2:5 with linespoints title "trans"
"""


def _parse_range(text: str) -> tuple[int, int]:
    """'a..b' (inclusive) or a single integer 'a' meaning a..a."""
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        return int(lo_text), int(hi_text)
    value = int(text)
    return value, value


def _range_arg(text: str) -> tuple[int, int]:
    try:
        return _parse_range(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A..B, got {text!r}") from None


def _model_of(args: argparse.Namespace) -> CostModel:
    return CostModel(args.model)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="solist",
        description="Self-organizing list search: simulate reorganization "
        "policies and verify them against their exact cost formulas.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="serve a request sequence and report its cost")
    sim.add_argument("--algo", required=True, choices=["mtf", "trans", "fc"])
    sim.add_argument("--seq", choices=["t1", "t2"], help="generated family (with --n/--k)")
    sim.add_argument("--n", type=int, help="list size for a generated family")
    sim.add_argument("--k", type=int, help="repetition count for a generated family")
    sim.add_argument("--list-file", help="file holding the initial list")
    sim.add_argument("--seq-file", help="file holding an explicit request stream")
    sim.add_argument("--model", choices=["full", "partial"], default="full")
    sim.add_argument("--per-pass", action="store_true", help="also print per-pass totals and configurations")
    sim.set_defaults(func=cmd_simulate)

    pre = sub.add_parser("predict", help="evaluate the closed-form cost for one configuration")
    pre.add_argument("--algo", required=True, choices=["mtf", "trans"])
    pre.add_argument("--seq", required=True, choices=["t1", "t2"])
    pre.add_argument("--n", type=int, required=True)
    pre.add_argument("--k", type=int, required=True)
    pre.set_defaults(func=cmd_predict)

    ver = sub.add_parser("verify", help="check formulas against simulation on a grid")
    ver.add_argument("--algo", choices=["mtf", "trans"], action="append",
                     help="restrict to one algorithm (repeatable; default both)")
    ver.add_argument("--seq", choices=["t1", "t2"], action="append",
                     help="restrict to one family (repeatable; default both)")
    ver.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    ver.add_argument("--k", type=_range_arg, required=True, metavar="A..B")
    ver.add_argument("--model", choices=["full", "partial"], default="full")
    ver.add_argument("--format", choices=["table", "csv"], default="table")
    ver.add_argument("--output", help="write the report here instead of stdout")
    ver.set_defaults(func=cmd_verify)

    cmp_ = sub.add_parser("compare", help="emit cost-vs-k CSV for mtf and trans at fixed n")
    cmp_.add_argument("--seq", required=True, choices=["t1", "t2"])
    cmp_.add_argument("--n", type=int, required=True)
    cmp_.add_argument("--k", type=_range_arg, required=True, metavar="A..B")
    cmp_.add_argument("--output", help="write the CSV here instead of stdout")
    cmp_.add_argument("--gnuplot", help="also write a gnuplot script plotting the CSV (needs --output)")
    cmp_.set_defaults(func=cmd_compare)

    cro = sub.add_parser("crossover", help="smallest k at which trans strictly beats mtf")
    cro.add_argument("--seq", required=True, choices=["t1", "t2"])
    cro.add_argument("--n", type=_range_arg, required=True, metavar="A..B")
    cro.add_argument("--kmax", type=int, required=True)
    cro.set_defaults(func=cmd_crossover)

    return parser


def _load_explicit(args: argparse.Namespace) -> tuple[ListState, object]:
    try:
        with open(args.list_file, encoding="utf-8") as handle:
            initial = parse_list_file(handle.read())
        with open(args.seq_file, encoding="utf-8") as handle:
            sequence = parse_sequence_file(handle.read())
    except OSError as exc:
        raise ParseError(f"cannot read input file: {exc}") from None
    return initial, sequence


def cmd_simulate(args: argparse.Namespace) -> int:
    family_source = args.seq is not None
    file_source = args.list_file is not None or args.seq_file is not None
    if family_source == file_source:
        raise InvalidParameterError(
            "exactly one sequence source: either --seq with --n/--k, or --list-file with --seq-file"
        )
    if family_source:
        if args.n is None or args.k is None:
            raise InvalidParameterError("--seq needs both --n and --k")
        family = _FAMILY_BY_FLAG[args.seq]
        initial = ListState.initial(args.n)
        sequence = _GEN_BY_FAMILY[family](args.n, args.k)
    else:
        if args.list_file is None or args.seq_file is None:
            raise InvalidParameterError("explicit input needs both --list-file and --seq-file")
        initial, sequence = _load_explicit(args)

    ledger = serve(make_policy(args.algo), initial, sequence, _model_of(args))
    if args.per_pass:
        if ledger.pass_totals is None:
            print("no pass structure declared for this sequence")
        else:
            for index, (cost, config) in enumerate(zip(ledger.pass_totals, ledger.pass_end_configs), 1):
                items = " ".join(str(item) for item in config.order)
                print(f"pass {index} cost {cost} config {items}")
    print(f"total {ledger.grand_total}")
    return 0


def cmd_predict(args: argparse.Namespace) -> int:
    prediction = predict(args.algo, _FAMILY_BY_FLAG[args.seq], args.n, args.k)
    print(
        f"algo {prediction.algorithm.value} family {prediction.family.value} "
        f"n {prediction.n} k {prediction.k} case {prediction.case_id} total {prediction.total}"
    )
    return 0


def _emit(text: str, output: str | None) -> None:
    if output is None:
        print(text, end="")
    else:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def cmd_verify(args: argparse.Namespace) -> int:
    algorithms = [as_algorithm(a) for a in (args.algo or ["mtf", "trans"])]
    families = [_FAMILY_BY_FLAG[f] for f in (args.seq or ["t1", "t2"])]
    report = verify_grid(algorithms, families, args.n, args.k, _model_of(args))

    if args.format == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(VERIFY_HEADER)
        for cell in report.cells:
            writer.writerow([
                cell.algorithm.value, cell.family.value, cell.n, cell.k,
                cell.simulated, cell.predicted, "true" if cell.match else "false",
            ])
        _emit(buffer.getvalue(), args.output)
    else:
        lines = []
        per_pair = (report.n_range[1] - report.n_range[0] + 1) * (report.k_range[1] - report.k_range[0] + 1)
        for algorithm in report.algorithms:
            for family in report.families:
                bad = sum(
                    1 for cell in report.mismatches
                    if cell.algorithm is algorithm and cell.family is family
                )
                lines.append(f"{algorithm.value} {family.value}: {bad} mismatches / {per_pair} cells")
        for cell in report.mismatches:
            where = "" if cell.first_divergence is None else f" first_divergence {cell.first_divergence}"
            lines.append(
                f"MISMATCH {cell.algorithm.value} {cell.family.value} n {cell.n} k {cell.k} "
                f"simulated {cell.simulated} predicted {cell.predicted}{where}"
            )
        verdict = "PASS" if report.passed else "FAIL"
        lines.append(f"verdict {verdict} ({len(report.cells)} cells, {report.mismatch_count} mismatches)")
        _emit("\n".join(lines) + "\n", args.output)

    return 0 if report.passed else 1


def cmd_compare(args: argparse.Namespace) -> int:
    if args.gnuplot is not None and args.output is None:
        raise InvalidParameterError("--gnuplot needs --output so the script can reference the CSV")
    family = _FAMILY_BY_FLAG[args.seq]
    k_lo, k_hi = args.k
    if k_lo < 1 or k_lo > k_hi:
        raise InvalidParameterError(f"k range must satisfy 1 <= lo <= hi, got {k_lo}..{k_hi}")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COMPARE_HEADER)
    for k in range(k_lo, k_hi + 1):
        mtf_cost = predict(Algorithm.MTF, family, args.n, k).total
        trans_cost = predict(Algorithm.TRANS, family, args.n, k).total
        writer.writerow([args.n, k, family.value, mtf_cost, trans_cost])
    _emit(buffer.getvalue(), args.output)

    if args.gnuplot is not None:
        with open(args.gnuplot, "w", encoding="utf-8", newline="") as handle:
            handle.write(_GNUPLOT_TEMPLATE.format(csv=args.output))
    return 0


def cmd_crossover(args: argparse.Namespace) -> int:
    family = _FAMILY_BY_FLAG[args.seq]
    n_lo, n_hi = args.n
    if n_lo < 1 or n_lo > n_hi:
        raise InvalidParameterError(f"n range must satisfy 1 <= lo <= hi, got {n_lo}..{n_hi}")
    print("family n k_star")
    for n in range(n_lo, n_hi + 1):
        result = crossover(family, n, args.kmax)
        k_star = "none" if result.k_star is None else str(result.k_star)
        print(f"{family.value} {n} {k_star}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ItemNotInListError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except SolistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
