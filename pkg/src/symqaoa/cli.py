"""Command-line interface: corpus generation, symmetry census, Max-Cut,
sweeps, and aggregation."""

from __future__ import annotations

import argparse
import os
import sys

from . import harness, metrics
from .corpus import generate_connected
from .graphs import exact_max_cut, parse_graph6, write_graph6_file


def _cmd_gen_corpus(args) -> int:
    graphs = generate_connected(
        args.n, progress=lambda k, c: print(f"  {k} vertices: {c} graphs", flush=True)
    )
    write_graph6_file(args.out, graphs)
    print(f"wrote {len(graphs)} connected graphs on {args.n} vertices to {args.out}")
    return 0


def _cmd_symmetry(args) -> int:
    rows = harness.census(args.graphs)
    if args.out:
        harness.write_census(rows, args.out)
    else:
        harness.write_census(rows, "/dev/stdout")
    trivial = sum(1 for r in rows if r["group_order"] == 1)
    print(
        f"{len(rows)} graphs: {trivial} with trivial symmetry, "
        f"{len(rows) - trivial} with nontrivial symmetry",
        file=sys.stderr,
    )
    return 0


def _cmd_maxcut(args) -> int:
    for gid, g6 in harness.load_corpus_lines(args.graphs):
        g = parse_graph6(g6)
        cut = exact_max_cut(g)
        print(f"{gid},{g6},{g.n},{g.m},{cut.value},{cut.assignment:0{g.n}b}")
    return 0


def _cmd_sweep(args) -> int:
    cfg = harness.SweepConfig(
        corpus_path=args.graphs,
        schemes=tuple(args.schemes.split(",")),
        p=args.p,
        restarts=args.restarts,
        tol=args.tol,
        max_evals=args.max_evals,
        master_seed=args.seed,
        workers=args.workers,
        out_path=args.out,
        filter_nontrivial=args.filter == "nontrivial-sym",
        sample=args.sample,
        warm_start=not args.no_warm_start,
    )
    records, failures = harness.sweep(cfg, log=lambda msg: print(msg, flush=True))
    harness.write_records(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    if failures:
        for note in failures:
            print(f"FAILED: {note}", file=sys.stderr)
        print(f"{len(failures)} graphs failed", file=sys.stderr)
    variant = [r for r in records if r.scheme in harness.VARIANT_SCHEMES]
    if variant:
        for scheme, s in metrics.aggregate(variant).items():
            print(
                f"{scheme}: {s.count} graphs, k=0 on {s.fraction_k_zero:.1%}, "
                f"mean l {s.mean_l:.3f}"
            )
    return 0


def _cmd_aggregate(args) -> int:
    rows = harness.read_records(args.infile)
    variant = [r for r in rows if r["scheme"] in harness.VARIANT_SCHEMES]
    if not variant:
        print("no variant-scheme records to aggregate", file=sys.stderr)
        return 1
    summaries = metrics.aggregate(variant)
    with open(args.out, "w", encoding="ascii") as fh:
        fh.write(harness.summaries_to_csv(summaries))
    print(f"wrote summary to {args.out}")
    if args.histograms:
        os.makedirs(args.histograms, exist_ok=True)
        for scheme, s in summaries.items():
            for name, hist in (("k", s.k_histogram), ("r_diff", s.r_diff_histogram)):
                stem = os.path.join(args.histograms, f"{scheme}_{name}")
                with open(stem + ".csv", "w", encoding="ascii") as fh:
                    fh.write(harness.histogram_to_csv(hist))
                with open(stem + ".svg", "w", encoding="ascii") as fh:
                    fh.write(harness.histogram_to_svg(hist, f"{scheme}: {name}"))
        print(f"wrote histograms to {args.histograms}")
    for scheme, s in summaries.items():
        print(
            f"{scheme}: {s.count} records, k=0 fraction {s.fraction_k_zero:.3f}, "
            f"mean l {s.mean_l:.3f}, mean k (k>0) {s.mean_k_positive:.3f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symqaoa",
        description="Symmetry-tied multi-angle QAOA experiments on Max-Cut",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-corpus", help="generate connected non-isomorphic graphs")
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen_corpus)

    p = sub.add_parser("symmetry", help="automorphism census of a graph6 file")
    p.add_argument("--graphs", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_symmetry)

    p = sub.add_parser("maxcut", help="exact Max-Cut values of a graph6 file")
    p.add_argument("--graphs", required=True)
    p.set_defaults(func=_cmd_maxcut)

    p = sub.add_parser("sweep", help="optimize schemes over a corpus")
    p.add_argument("--graphs", required=True)
    p.add_argument("--schemes", default="max-sym", help="comma-separated variants")
    p.add_argument("--p", type=int, default=1)
    p.add_argument("--restarts", type=int, default=10)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--max-evals", type=int, default=None)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", required=True)
    p.add_argument("--filter", choices=["nontrivial-sym"], default=None)
    p.add_argument("--sample", type=int, default=None, help="fixed random subsample size")
    p.add_argument("--no-warm-start", action="store_true")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("aggregate", help="summarize a results CSV")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--histograms", default=None)
    p.set_defaults(func=_cmd_aggregate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
