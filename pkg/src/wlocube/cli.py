"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad values, failed validation),
2 usage error (argparse's default).
"""

import argparse
import sys
from pathlib import Path

from . import bench as bench_mod
from . import fixtures as fixtures_mod
from .counts import (
    ORACLE_CHAINS_PRECEDES_MAX_N,
    ORACLE_CHAINS_WO_MAX_N,
    ORACLE_LINEXT_MAX_N,
    count_max_chains_precedes,
    count_max_chains_wo,
    count_weight_orders,
    oracle_count_chains,
    oracle_count_linear_extensions,
)
from .masks import mask_bit_rows, mask_paper_serial, masks_recursive, word_count
from .search import TruthTable, algebraic_degree, mobius_transform, wlo_search_max, wlo_search_min
from .subsets import SubsetUniverse, members_in_order, rank, subsets_in_cardinality_order, unrank
from .wlo import layer_slice, sequence_lines, wlo_bucket

SEQUENCES = {
    "A051459": (count_weight_orders, lambda n: oracle_count_linear_extensions(n) if n <= ORACLE_LINEXT_MAX_N else None),
    "A001142": (count_max_chains_wo, lambda n: oracle_count_chains(n, "weight_order") if n <= ORACLE_CHAINS_WO_MAX_N else None),
    "A000142": (
        count_max_chains_precedes,
        lambda n: oracle_count_chains(n, "precedes") if n <= ORACLE_CHAINS_PRECEDES_MAX_N else None,
    ),
}


def _load_truth_table(n: int, spec: str) -> TruthTable:
    """Interpret --tt/--anf: an existing file of raw little-endian words,
    otherwise a string of 2^n '0'/'1' characters, coordinate 0 first."""
    path = Path(spec)
    if path.exists():
        return TruthTable.from_raw(n, path.read_bytes())
    return TruthTable.from_bitstring(n, spec)


def _cmd_wlo(args) -> int:
    seq = wlo_bucket(args.n)
    serials = layer_slice(seq, args.layer) if args.layer is not None else seq.order
    if args.out:
        Path(args.out).write_text("\n".join(str(s) for s in serials) + "\n")
    else:
        print(" ".join(str(s) for s in serials))
    return 0


def _cmd_masks(args) -> int:
    ms = masks_recursive(args.n)
    if args.paper_serials:
        for mask in ms.masks:
            print(mask_paper_serial(mask))
    else:
        for mask in ms.masks:
            print(mask_bit_rows(mask))
    return 0


def _cmd_search(args) -> int:
    tt = _load_truth_table(args.n, args.tt)
    seq = wlo_bucket(args.n)
    hit = wlo_search_min(tt, seq) if args.min else wlo_search_max(tt, seq)
    print("none" if hit is None else f"{hit.serial} {hit.weight}")
    return 0


def _cmd_degree(args) -> int:
    anf = _load_truth_table(args.n, args.anf)
    if args.from_tt:
        anf = mobius_transform(anf)
    deg = algebraic_degree(anf, masks_recursive(args.n))
    print("none" if deg is None else deg)
    return 0


def _cmd_enumerate(args) -> int:
    closed_form, oracle = SEQUENCES[args.seq]
    for n in range(1, args.upto + 1):
        value = closed_form(n)
        if args.oracle:
            check = oracle(n)
            if check is not None and check != value:
                raise ValueError(f"oracle disagrees at n={n}: closed form {value}, oracle {check}")
        print(f"{n} {value}")
    return 0


def _cmd_subsets(args) -> int:
    universe = SubsetUniverse(tuple(args.universe.split(",")))
    if args.all:
        for handle in subsets_in_cardinality_order(universe):
            print(",".join(members_in_order(handle)))
    elif args.k is not None:
        from .subsets import k_subsets

        for handle in k_subsets(universe, args.k):
            print(",".join(members_in_order(handle)))
    elif args.rank is not None:
        members = [m for m in args.rank.split(",") if m]
        print(rank(universe, members).serial)
    else:
        print(",".join(sorted(unrank(universe, args.unrank), key=universe.elements.index)))
    return 0


def _cmd_bench(args) -> int:
    if args.gen:
        wpf = word_count(args.n)
        bench_mod.gen_corpus(args.count, wpf, args.seed, args.corpus, significant_bits=1 << args.n)
        print(f"wrote {args.count} functions of {args.n} variables to {args.corpus}")
        return 0
    corpus = bench_mod.load_corpus(args.corpus)
    algorithms = args.algorithms.split(",") if args.algorithms else list(bench_mod.ALGORITHMS)
    report = bench_mod.run_bench(corpus, args.n, algorithms)
    for r in report.results:
        print(f"{r.algorithm}: {r.seconds:.6f} s, {r.ops} ops")
    if args.report:
        bench_mod.write_report(report, args.report)
    return 0


def _cmd_fixtures(args) -> int:
    results = fixtures_mod.validate_directory(args.dir)
    if not results:
        print(f"no known fixture files found in {args.dir}", file=sys.stderr)
        return 1
    failed = False
    for name, mismatches in results.items():
        if mismatches:
            failed = True
            idx, want, got = mismatches[0]
            print(f"{name}: FAIL at index {idx} (expected {want}, got {got})")
        else:
            print(f"{name}: pass")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wlocube", description="Weight-order tools for the Boolean cube")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("wlo", help="print the WLO sequence or one layer of it")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--layer", type=int, default=None)
    p.add_argument("--out", default=None, help="write one serial per line to this file")
    p.set_defaults(func=_cmd_wlo)

    p = sub.add_parser("masks", help="print the layer masks")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--paper-serials", action="store_true", dest="paper_serials", help="print decimal mask serials")
    p.set_defaults(func=_cmd_masks)

    p = sub.add_parser("search", help="max/min-weight vector in a function's support")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tt", required=True, help="raw word file or 0/1 string, coordinate 0 first")
    p.add_argument("--min", action="store_true")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("degree", help="algebraic degree from an ANF coefficient vector")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--anf", required=True, help="raw word file or 0/1 string, coordinate 0 first")
    p.add_argument("--from-tt", action="store_true", dest="from_tt", help="input is a truth table; transform first")
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("enumerate", help="closed-form counting sequences")
    p.add_argument("--seq", choices=sorted(SEQUENCES), required=True)
    p.add_argument("--upto", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="cross-check with the brute-force oracle where feasible")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("subsets", help="subset generation and ranking/unranking")
    p.add_argument("--universe", required=True, help="comma-separated distinct labels")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true", help="all subsets in cardinality order")
    group.add_argument("--k", type=int, default=None, help="only the k-element subsets")
    group.add_argument("--rank", default=None, help="comma-separated members; prints the serial")
    group.add_argument("--unrank", type=int, default=None, help="serial; prints the members")
    p.set_defaults(func=_cmd_subsets)

    p = sub.add_parser("bench", help="generate corpora and time the search algorithms")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--gen", action="store_true")
    mode.add_argument("--run", action="store_true")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--corpus", required=True)
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--algorithms", default=None, help="comma-separated subset of exhaustive,wlo,bitwise")
    p.add_argument("--report", default=None, help="write a CSV report here")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("fixtures", help="validate committed OEIS b-files")
    p.add_argument("--dir", required=True)
    p.set_defaults(func=_cmd_fixtures)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
