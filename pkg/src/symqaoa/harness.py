"""Sweep orchestration: per-graph scheme runs, CSV persistence, aggregation.

Every random choice in a sweep derives from the master seed and stable keys
(graph line number, scheme id, restart index), so the output CSV is
byte-identical across reruns and worker counts. Wall-clock timings are kept
on the in-memory records but never written to the canonical CSV.
"""

from __future__ import annotations

import csv
import io
import multiprocessing
import time
from dataclasses import dataclass

import numpy as np

from . import metrics
from .graphs import Graph, exact_max_cut, parse_graph6
from .optimizer import (
    DEFAULT_RESTARTS,
    DEFAULT_TOL,
    ObjectiveSpec,
    OptResult,
    derive_seed,
    multistart_optimize,
)
from .simulator import CircuitObjective
from .symmetry import (
    automorphism_group,
    distinct_orbit_partitions,
    generator_set,
    orbits_of,
)
from .tying import (
    ParameterTying,
    embed_into_ma,
    embed_plain,
    parameter_box,
    tie_from_partition,
    tie_ma,
    tie_plain,
    tie_random,
)

SCHEME_ORDER = ("plain-qaoa", "ma", "max-sym", "best-1sym", "rand-group")
SCHEME_IDS = {name: i for i, name in enumerate(SCHEME_ORDER)}
VARIANT_SCHEMES = ("max-sym", "best-1sym", "rand-group")

SAMPLE_KEY = 991  # spawn key reserved for subsample selection

CSV_VERSION = "symqaoa-results-v1"
CSV_COLUMNS = (
    "graph_id",
    "graph6",
    "n",
    "m",
    "scheme",
    "p",
    "num_params",
    "num_gamma",
    "num_beta",
    "best_expectation",
    "exact_maxcut",
    "r",
    "k",
    "l",
    "group_order",
    "num_vertex_orbits",
    "num_edge_orbits",
    "flags",
    "restarts",
    "evals",
    "seed",
)

CENSUS_COLUMNS = (
    "graph_id",
    "graph6",
    "n",
    "m",
    "group_order",
    "num_generators",
    "num_vertex_orbits",
    "num_edge_orbits",
)


@dataclass(frozen=True)
class SweepConfig:
    corpus_path: str
    schemes: tuple[str, ...] = ("max-sym",)
    p: int = 1
    restarts: int = DEFAULT_RESTARTS
    tol: float = DEFAULT_TOL
    max_evals: int | None = None
    master_seed: int = 42
    workers: int = 1
    out_path: str | None = None
    filter_nontrivial: bool = False
    sample: int | None = None
    warm_start: bool = True

    def __post_init__(self):
        if not self.schemes:
            raise ValueError("schemes must be nonempty")
        for s in self.schemes:
            if s not in VARIANT_SCHEMES:
                raise ValueError(f"unknown scheme {s!r}; choose from {VARIANT_SCHEMES}")
        if self.p < 1:
            raise ValueError("p must be >= 1")


@dataclass
class RunRecord:
    graph_id: int
    graph6: str
    n: int
    m: int
    scheme: str
    p: int
    num_params: int
    num_gamma: int
    num_beta: int
    best_expectation: float
    exact_maxcut: int
    r: float
    k: float | None
    l: float
    group_order: int
    num_vertex_orbits: int
    num_edge_orbits: int
    flags: str
    restarts: int
    evals: int
    seed: int
    wall_ms: int = 0
    # joined ma-row context, used by metrics.aggregate
    f_ma: float = 0.0
    r_ma: float = 0.0
    num_params_ma: int = 0

    def get(self, key):
        return getattr(self, key)


def _optimize_tying(
    g: Graph,
    t: ParameterTying,
    cfg: SweepConfig,
    seed_seq,
    extra_starts=(),
) -> OptResult:
    objective = CircuitObjective(g, t, cfg.p)
    spec = ObjectiveSpec(
        dim=objective.dim, evaluate=objective, box=parameter_box(t, cfg.p)
    )
    return multistart_optimize(
        spec,
        restarts=cfg.restarts,
        seed=seed_seq,
        tol=cfg.tol,
        max_evals_per_start=cfg.max_evals,
        extra_starts=extra_starts,
    )


def run_graph(graph_id: int, g6: str, cfg: SweepConfig) -> list[RunRecord]:
    """All requested scheme records for one corpus graph.

    Runs plain QAOA first, then each variant warm-started from the embedded
    plain optimum, then ma warm-started from plain and from every variant
    optimum, which keeps the plain <= variant <= ma objective chain intact
    under local optimization.
    """
    t0 = time.perf_counter()
    g = parse_graph6(g6)
    exact = exact_max_cut(g).value
    group = automorphism_group(g)
    gens = generator_set(group)
    max_orbits = orbits_of(g, gens)

    def base(scheme, t, opt, num_v, num_e, flags=""):
        return RunRecord(
            graph_id=graph_id,
            graph6=g6,
            n=g.n,
            m=g.m,
            scheme=scheme,
            p=cfg.p,
            num_params=cfg.p * t.params_per_layer,
            num_gamma=t.num_gamma,
            num_beta=t.num_beta,
            best_expectation=opt.best_value,
            exact_maxcut=exact,
            r=metrics.approx_ratio(opt.best_value, exact),
            k=None,
            l=metrics.l_ratio(g.m, g.n, num_e, num_v),
            group_order=len(group),
            num_vertex_orbits=num_v,
            num_edge_orbits=num_e,
            flags=flags,
            restarts=opt.restarts_used,
            evals=opt.evaluations,
            seed=cfg.master_seed,
        )

    plain_t = tie_plain(g)
    plain_opt = _optimize_tying(
        g, plain_t, cfg, derive_seed(cfg.master_seed, graph_id, SCHEME_IDS["plain-qaoa"])
    )
    records = [base("plain-qaoa", plain_t, plain_opt, 1, 1)]

    variant_results: list[tuple[str, ParameterTying, OptResult, int, int, str]] = []
    for scheme in cfg.schemes:
        sid = SCHEME_IDS[scheme]
        if scheme == "max-sym":
            t = tie_from_partition(max_orbits, "max-sym")
            warm = [embed_plain(t, plain_opt.best_params, cfg.p)] if cfg.warm_start else []
            opt = _optimize_tying(
                g, t, cfg, derive_seed(cfg.master_seed, graph_id, sid), warm
            )
            variant_results.append(
                (scheme, t, opt, max_orbits.num_vertex_orbits, max_orbits.num_edge_orbits, "")
            )
        elif scheme == "best-1sym":
            candidates = [
                p for p in distinct_orbit_partitions(g, group) if not p.is_discrete(g)
            ]
            if not candidates:
                # trivial group: the scheme degenerates to ma
                t = tie_ma(g)
                warm = [embed_plain(t, plain_opt.best_params, cfg.p)] if cfg.warm_start else []
                opt = _optimize_tying(
                    g, t, cfg, derive_seed(cfg.master_seed, graph_id, sid, 0), warm
                )
                variant_results.append((scheme, t, opt, g.n, g.m, "no-reduction"))
            else:
                best = None
                for idx, part in enumerate(candidates):
                    t = tie_from_partition(part, "best-1sym")
                    warm = (
                        [embed_plain(t, plain_opt.best_params, cfg.p)]
                        if cfg.warm_start
                        else []
                    )
                    opt = _optimize_tying(
                        g, t, cfg, derive_seed(cfg.master_seed, graph_id, sid, idx), warm
                    )
                    key = (-opt.best_value, t.params_per_layer, idx)
                    if best is None or key < best[0]:
                        best = (key, t, opt, part)
                _, t, opt, part = best
                variant_results.append(
                    (scheme, t, opt, part.num_vertex_orbits, part.num_edge_orbits, "")
                )
        elif scheme == "rand-group":
            t = tie_random(
                g,
                max_orbits.num_vertex_orbits,
                max_orbits.num_edge_orbits,
                derive_seed(cfg.master_seed, graph_id, sid, 0),
            )
            warm = [embed_plain(t, plain_opt.best_params, cfg.p)] if cfg.warm_start else []
            opt = _optimize_tying(
                g, t, cfg, derive_seed(cfg.master_seed, graph_id, sid, 1), warm
            )
            variant_results.append(
                (scheme, t, opt, t.num_beta, t.num_gamma, "")
            )

    ma_t = tie_ma(g)
    ma_warm = []
    if cfg.warm_start:
        ma_warm.append(embed_plain(ma_t, plain_opt.best_params, cfg.p))
        ma_warm.extend(
            embed_into_ma(t, opt.best_params, cfg.p) for _, t, opt, *_ in variant_results
        )
    ma_opt = _optimize_tying(
        g, ma_t, cfg, derive_seed(cfg.master_seed, graph_id, SCHEME_IDS["ma"]), ma_warm
    )
    records.append(base("ma", ma_t, ma_opt, g.n, g.m))

    for scheme, t, opt, num_v, num_e, flags in variant_results:
        rec = base(scheme, t, opt, num_v, num_e, flags)
        try:
            rec.k = metrics.k_ratio(ma_opt.best_value, opt.best_value, plain_opt.best_value)
        except metrics.DegenerateDenominator:
            rec.flags = (rec.flags + ";" if rec.flags else "") + "degenerate-denominator"
        records.append(rec)

    wall_ms = int((time.perf_counter() - t0) * 1000)
    for rec in records:
        rec.wall_ms = wall_ms
        rec.f_ma = ma_opt.best_value
        rec.r_ma = metrics.approx_ratio(ma_opt.best_value, exact)
        rec.num_params_ma = cfg.p * (g.n + g.m)
    return records


def _worker(task):
    graph_id, g6, cfg = task
    try:
        return run_graph(graph_id, g6, cfg)
    except Exception as exc:  # keep the sweep alive on per-graph failures
        return (graph_id, g6, repr(exc))


def load_corpus_lines(path) -> list[tuple[int, str]]:
    """(1-based line number, graph6 record) pairs, skipping the format header."""
    out = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line or line == ">>graph6<<":
                continue
            out.append((lineno, line))
    return out


def select_graphs(cfg: SweepConfig) -> list[tuple[int, str]]:
    """Apply the nontrivial-symmetry filter and the fixed random subsample."""
    items = load_corpus_lines(cfg.corpus_path)
    if cfg.filter_nontrivial:
        items = [
            (gid, g6)
            for gid, g6 in items
            if len(automorphism_group(parse_graph6(g6))) > 1
        ]
    if cfg.sample is not None and cfg.sample < len(items):
        rng = np.random.default_rng(derive_seed(cfg.master_seed, SAMPLE_KEY))
        idx = sorted(rng.choice(len(items), size=cfg.sample, replace=False))
        items = [items[i] for i in idx]
    return items


def sweep(cfg: SweepConfig, log=None) -> tuple[list[RunRecord], list[str]]:
    """Run all schemes over the corpus; returns (sorted records, failure notes)."""
    items = select_graphs(cfg)
    tasks = [(gid, g6, cfg) for gid, g6 in items]
    results = []
    if cfg.workers > 1:
        with multiprocessing.Pool(cfg.workers) as pool:
            for i, res in enumerate(pool.imap_unordered(_worker, tasks, chunksize=8)):
                results.append(res)
                if log and (i + 1) % 100 == 0:
                    log(f"{i + 1}/{len(tasks)} graphs done")
    else:
        for i, task in enumerate(tasks):
            results.append(_worker(task))
            if log and (i + 1) % 100 == 0:
                log(f"{i + 1}/{len(tasks)} graphs done")

    records: list[RunRecord] = []
    failures: list[str] = []
    for res in results:
        if isinstance(res, tuple):
            gid, g6, err = res
            failures.append(f"graph {gid} ({g6}): {err}")
        else:
            records.extend(res)
    records.sort(key=lambda r: (r.graph_id, SCHEME_IDS[r.scheme]))
    return records, failures


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return format(x, ".12g")
    return str(x)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    buf.write(f"# {CSV_VERSION} columns={','.join(CSV_COLUMNS)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        writer.writerow([_fmt(getattr(rec, col)) for col in CSV_COLUMNS])
    return buf.getvalue()


def write_records(records, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(records_to_csv(records))


def read_records(path) -> list[dict]:
    """Parse a results CSV back into aggregate-ready dicts (ma context joined)."""
    rows = []
    with open(path, "r", encoding="ascii") as fh:
        header_line = fh.readline()
        if not header_line.startswith(f"# {CSV_VERSION}"):
            raise ValueError(f"unrecognized results file version: {header_line.strip()}")
        for row in csv.DictReader(fh):
            rows.append(row)
    ma_by_graph = {
        int(r["graph_id"]): r for r in rows if r["scheme"] == "ma"
    }
    out = []
    for r in rows:
        ma = ma_by_graph.get(int(r["graph_id"]))
        out.append(
            {
                "graph_id": int(r["graph_id"]),
                "graph6": r["graph6"],
                "n": int(r["n"]),
                "m": int(r["m"]),
                "scheme": r["scheme"],
                "num_params": int(r["num_params"]),
                "best_expectation": float(r["best_expectation"]),
                "exact_maxcut": int(r["exact_maxcut"]),
                "r": float(r["r"]),
                "k": float(r["k"]) if r["k"] else None,
                "l": float(r["l"]),
                "group_order": int(r["group_order"]),
                "num_vertex_orbits": int(r["num_vertex_orbits"]),
                "num_edge_orbits": int(r["num_edge_orbits"]),
                "flags": r["flags"],
                "f_ma": float(ma["best_expectation"]) if ma else float("nan"),
                "r_ma": float(ma["r"]) if ma else float("nan"),
                "num_params_ma": int(ma["num_params"]) if ma else 0,
            }
        )
    return out


def census(corpus_path) -> list[dict]:
    """Symmetry census: group order, generators, maximum orbit counts per graph."""
    rows = []
    for gid, g6 in load_corpus_lines(corpus_path):
        g = parse_graph6(g6)
        group = automorphism_group(g)
        gens = generator_set(group)
        orbits = orbits_of(g, gens)
        rows.append(
            {
                "graph_id": gid,
                "graph6": g6,
                "n": g.n,
                "m": g.m,
                "group_order": len(group),
                "num_generators": len(gens),
                "num_vertex_orbits": orbits.num_vertex_orbits,
                "num_edge_orbits": orbits.num_edge_orbits,
            }
        )
    return rows


def write_census(rows, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        writer = csv.DictWriter(fh, fieldnames=CENSUS_COLUMNS, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)


def read_census(path) -> list[dict]:
    with open(path, "r", encoding="ascii") as fh:
        return [
            {k: (v if k == "graph6" else int(v)) for k, v in row.items()}
            for row in csv.DictReader(fh)
        ]


def summaries_to_csv(summaries: dict[str, metrics.SchemeSummary]) -> str:
    cols = (
        "scheme",
        "count",
        "degenerate_count",
        "fraction_k_zero",
        "mean_k_all",
        "mean_k_positive",
        "mean_l",
        "mean_param_reduction",
        "mean_objective_decrease",
    )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for s in summaries.values():
        writer.writerow([_fmt(getattr(s, c)) for c in cols])
    return buf.getvalue()


def histogram_to_csv(hist: dict[float, int]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(("bin_left", "count"))
    for edge, count in hist.items():
        writer.writerow((_fmt(edge), count))
    return buf.getvalue()


def histogram_to_svg(hist: dict[float, int], title: str) -> str:
    """Minimal standalone SVG bar chart of a binned histogram."""
    width, height, margin = 640, 360, 45
    bars = sorted(hist.items())
    if not bars:
        bars = [(0.0, 0)]
    peak = max(c for _, c in bars) or 1
    bw = (width - 2 * margin) / len(bars)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}">',
        f'<text x="{width / 2}" y="20" text-anchor="middle" font-size="14">{title}</text>',
    ]
    for i, (edge, count) in enumerate(bars):
        h = (height - 2 * margin) * count / peak
        x = margin + i * bw
        y = height - margin - h
        parts.append(
            f'<rect x="{x:.1f}" y="{y:.1f}" width="{max(bw - 2, 1):.1f}" '
            f'height="{h:.1f}" fill="steelblue"/>'
        )
        parts.append(
            f'<text x="{x + bw / 2:.1f}" y="{height - margin + 14}" '
            f'text-anchor="middle" font-size="9">{edge:.2f}</text>'
        )
    parts.append(
        f'<line x1="{margin}" y1="{height - margin}" x2="{width - margin}" '
        f'y2="{height - margin}" stroke="black"/>'
    )
    parts.append("</svg>")
    return "\n".join(parts)
