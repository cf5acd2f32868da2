"""Command-line surface: number, matrix, eval, formula, verify, oracle.

All output is deterministic (fixed sort orders, fixed JSON key order) so
results can be golden-file tested.  Exit codes: 0 success, 1 verification
failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import io
import json
import sys

from . import blocks, formulas, layout, oracle, verify
from .core import (
    CubebandError,
    DELTA_DIM_MAX,
    ENUM_DIM_MAX,
    FORMULA_DIM_MAX,
    FULL_MATRIX_DIM_MAX,
    ORACLE_DIM_MAX,
)
from .hales import layer_table_recursive, numbering_from_table
from .layout import NumberingFileError


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _make_numbering(n: int, kind: str):
    table = layer_table_recursive(n)
    if kind == "hales":
        return numbering_from_table(table)
    return layout.antiband_numbering(n, table)


def cmd_number(args: argparse.Namespace) -> int:
    num = _make_numbering(args.n, args.kind)
    buf = io.StringIO()
    layout.write_numbering(num, buf)
    _write_output(buf.getvalue(), args.out)
    if not args.quiet:
        summary = (
            f"n={num.n} kind={num.kind} "
            f"bw={layout.bandwidth_of(num)} abw={layout.antibandwidth_of(num)}"
        )
        print(summary, file=sys.stdout if args.out else sys.stderr)
    return 0


def cmd_matrix(args: argparse.Namespace) -> int:
    buf = io.StringIO()
    if args.full:
        if args.n > FULL_MATRIX_DIM_MAX:
            raise CubebandError(
                f"full matrix export capped at n={FULL_MATRIX_DIM_MAX}"
            )
        num = _make_numbering(args.n, args.kind)
        blocks.write_matrix_market_full(num, buf)
    else:
        if args.n > DELTA_DIM_MAX:
            raise CubebandError(f"block export capped at n={DELTA_DIM_MAX}")
        k, k2 = args.block
        table = layer_table_recursive(args.n)
        block = blocks.layer_adjacency(table, k, k2)
        blocks.write_matrix_market_block(block, buf)
    _write_output(buf.getvalue(), args.out)
    return 0


def cmd_eval(args: argparse.Namespace) -> int:
    with open(args.file, encoding="utf-8") as fh:
        num = layout.read_numbering(fh)
    report = {
        "n": num.n,
        "kind": num.kind,
        "bandwidth": layout.bandwidth_of(num),
        "antibandwidth": layout.antibandwidth_of(num),
    }
    _write_output(json.dumps(report) + "\n", args.out)
    return 0


def cmd_formula(args: argparse.Namespace) -> int:
    if not 1 <= args.n_max <= FORMULA_DIM_MAX:
        raise CubebandError(f"--n-max must be in 1..{FORMULA_DIM_MAX}")
    rows = []
    for n in range(1, args.n_max + 1):
        row = {
            "n": n,
            "bw": formulas.hypercube_bandwidth(n),
            "abw": formulas.hypercube_antibandwidth(n),
        }
        if args.radii:
            row["radii_up"] = [formulas.radius_up(n, k) for k in range(n)]
        rows.append(row)
    if args.json:
        text = json.dumps(rows) + "\n"
    else:
        header = ["n", "bw", "abw"] + (["radii_up"] if args.radii else [])
        lines = ["\t".join(header)]
        for row in rows:
            cells = [str(row["n"]), str(row["bw"]), str(row["abw"])]
            if args.radii:
                cells.append(",".join(str(r) for r in row["radii_up"]))
            lines.append("\t".join(cells))
        text = "\n".join(lines) + "\n"
    _write_output(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    records = verify.run_checks(args.n_max)
    text = json.dumps(records, indent=2) + "\n"
    _write_output(text, args.out)
    failed = [r for r in records if not r["pass"]]
    if not args.quiet:
        print(
            f"{len(records) - len(failed)}/{len(records)} checks passed",
            file=sys.stderr,
        )
    return 1 if failed else 0


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.target == "bandwidth":
        value, witness = oracle.brute_force_bandwidth(args.n)
    else:
        value, witness = oracle.brute_force_antibandwidth(args.n)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            layout.write_numbering(witness, fh)
    report = {"n": args.n, "target": args.target, "optimum": value}
    print(json.dumps(report))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cubeband",
        description=(
            "Optimal bandwidth and antibandwidth layouts of the n-cube. "
            f"Limits: enumeration n<={ENUM_DIM_MAX}, blocks n<={DELTA_DIM_MAX}, "
            f"full matrices n<={FULL_MATRIX_DIM_MAX}, formulas n<={FORMULA_DIM_MAX}, "
            f"brute-force oracle n<={ORACLE_DIM_MAX}."
        ),
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("--quiet", action="store_true", help="suppress summary lines")
    common.add_argument("--json", action="store_true", help="JSON output where applicable")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("number", parents=[common], help="write a numbering file")
    p.add_argument("-n", type=int, required=True, metavar="DIM")
    p.add_argument("--kind", choices=["hales", "antiband"], default="hales")
    p.set_defaults(func=cmd_number)

    p = sub.add_parser("matrix", parents=[common], help="export Matrix Market files")
    p.add_argument("-n", type=int, required=True, metavar="DIM")
    p.add_argument("--kind", choices=["hales", "antiband"], default="hales")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--full", action="store_true", help="full adjacency matrix (symmetric pattern)")
    g.add_argument("--block", nargs=2, type=int, metavar=("K", "K2"), help="one layer-pair block")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("eval", parents=[common], help="evaluate a numbering file")
    p.add_argument("file", help="numbering file to evaluate")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("formula", parents=[common], help="tabulate exact bw/abw values")
    p.add_argument("--n-max", type=int, required=True, metavar="N")
    p.add_argument("--radii", action="store_true", help="include per-k up-block radii")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    p.add_argument("--n-max", type=int, required=True, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force optimum for tiny cubes")
    p.add_argument("-n", type=int, required=True, metavar="DIM")
    p.add_argument("--target", choices=["bandwidth", "antibandwidth"], default="bandwidth")
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CubebandError, NumberingFileError, ValueError) as exc:
        print(f"cubeband: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cubeband: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
