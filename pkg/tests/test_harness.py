import pytest

from symqaoa.graphs import encode_graph6, make_family, write_graph6_file
from symqaoa.harness import (
    RunRecord,
    SweepConfig,
    census,
    histogram_to_csv,
    histogram_to_svg,
    load_corpus_lines,
    read_census,
    read_records,
    records_to_csv,
    run_graph,
    select_graphs,
    summaries_to_csv,
    sweep,
    write_census,
    write_records,
)
from symqaoa.metrics import aggregate

from test_symmetry import ASYMMETRIC

STAR8 = encode_graph6(make_family("star", 8))
CYCLE8 = encode_graph6(make_family("cycle", 8))


def quick_cfg(path="unused", **kw):
    kw.setdefault("schemes", ("max-sym",))
    kw.setdefault("restarts", 3)
    return SweepConfig(corpus_path=str(path), **kw)


class TestSweepConfig:
    def test_rejects_empty_or_unknown_schemes(self):
        with pytest.raises(ValueError):
            SweepConfig(corpus_path="x", schemes=())
        with pytest.raises(ValueError):
            SweepConfig(corpus_path="x", schemes=("ma",))

    def test_rejects_bad_p(self):
        with pytest.raises(ValueError):
            SweepConfig(corpus_path="x", p=0)


class TestRunGraph:
    def test_cycle8_max_sym_two_params(self):
        recs = run_graph(1, CYCLE8, quick_cfg())
        by = {r.scheme: r for r in recs}
        assert by["max-sym"].num_params == 2
        assert by["max-sym"].group_order == 16

    def test_asymmetric_max_sym_equals_ma(self):
        recs = run_graph(1, encode_graph6(ASYMMETRIC), quick_cfg())
        by = {r.scheme: r for r in recs}
        assert by["max-sym"].num_params == ASYMMETRIC.n + ASYMMETRIC.m
        assert by["max-sym"].num_params == by["ma"].num_params

    def test_star8_reaches_exact_cut(self):
        recs = run_graph(1, STAR8, quick_cfg(restarts=10))
        by = {r.scheme: r for r in recs}
        assert by["max-sym"].num_params == 3
        assert abs(by["max-sym"].best_expectation - 7.0) < 1e-3
        assert abs(by["ma"].best_expectation - 7.0) < 1e-3

    def test_best_1sym_on_path_like_graph(self):
        g6 = encode_graph6(make_family("path", 3))
        cfg = quick_cfg(schemes=("best-1sym",))
        recs = run_graph(1, g6, cfg)
        by = {r.scheme: r for r in recs}
        assert by["best-1sym"].num_params == 3  # orbits {0,2},{1}; one edge orbit
        assert by["best-1sym"].flags == ""

    def test_best_1sym_no_reduction_flag(self):
        cfg = quick_cfg(schemes=("best-1sym",))
        recs = run_graph(1, encode_graph6(ASYMMETRIC), cfg)
        by = {r.scheme: r for r in recs}
        assert by["best-1sym"].flags == "no-reduction"
        assert by["best-1sym"].num_params == ASYMMETRIC.n + ASYMMETRIC.m

    def test_best_1sym_matches_ma_on_star(self):
        cfg = quick_cfg(schemes=("best-1sym",), restarts=5)
        recs = run_graph(1, encode_graph6(make_family("star", 6)), cfg)
        by = {r.scheme: r for r in recs}
        assert abs(by["best-1sym"].best_expectation - by["ma"].best_expectation) < 1e-6

    def test_rand_group_matches_max_sym_param_count(self):
        cfg = quick_cfg(schemes=("max-sym", "rand-group"))
        recs = run_graph(1, STAR8, cfg)
        by = {r.scheme: r for r in recs}
        assert by["rand-group"].num_params == by["max-sym"].num_params

    def test_warm_start_nesting_chain(self):
        cfg = quick_cfg(schemes=("max-sym",), restarts=3)
        for g6 in (CYCLE8, STAR8):
            by = {r.scheme: r for r in run_graph(1, g6, cfg)}
            assert by["plain-qaoa"].best_expectation <= by["max-sym"].best_expectation + 1e-9
            assert by["max-sym"].best_expectation <= by["ma"].best_expectation + 1e-9

    def test_k_and_l_fields(self):
        by = {r.scheme: r for r in run_graph(1, STAR8, quick_cfg(restarts=5))}
        rec = by["max-sym"]
        assert rec.k == pytest.approx(0.0, abs=1e-4)
        assert rec.l == pytest.approx((15 - 3) / 13)
        assert by["plain-qaoa"].k is None and by["ma"].k is None
        assert rec.r == pytest.approx(rec.best_expectation / rec.exact_maxcut)


class TestSweepAndCsv:
    @pytest.fixture()
    def tiny_corpus(self, tmp_path):
        path = tmp_path / "tiny.g6"
        write_graph6_file(path, [ASYMMETRIC, make_family("star", 8)])
        return path

    def test_asymmetric_graph_rows(self, tmp_path):
        path = tmp_path / "one.g6"
        write_graph6_file(path, [ASYMMETRIC])
        records, failures = sweep(quick_cfg(path))
        assert not failures
        assert [r.scheme for r in records] == ["plain-qaoa", "ma", "max-sym"]
        by = {r.scheme: r for r in records}
        assert by["max-sym"].num_params == by["ma"].num_params

    def test_csv_roundtrip(self, tiny_corpus, tmp_path):
        records, _ = sweep(quick_cfg(tiny_corpus))
        out = tmp_path / "res.csv"
        write_records(records, out)
        rows = read_records(out)
        assert len(rows) == len(records)
        ms = [r for r in rows if r["scheme"] == "max-sym"]
        orig = [r for r in records if r.scheme == "max-sym"]
        for row, rec in zip(ms, orig):
            assert row["best_expectation"] == pytest.approx(rec.best_expectation, abs=1e-10)
            assert row["f_ma"] == pytest.approx(rec.f_ma, abs=1e-10)
        # rows are aggregate-ready
        aggregate(ms)

    def test_deterministic_across_worker_counts(self, tiny_corpus):
        r1, _ = sweep(quick_cfg(tiny_corpus, workers=1))
        r2, _ = sweep(quick_cfg(tiny_corpus, workers=2))
        assert records_to_csv(r1) == records_to_csv(r2)

    def test_filter_nontrivial(self, tiny_corpus):
        items = select_graphs(quick_cfg(tiny_corpus, filter_nontrivial=True))
        assert len(items) == 1  # the star survives, the asymmetric graph drops

    def test_sample_is_fixed_given_seed(self, tmp_path):
        path = tmp_path / "many.g6"
        write_graph6_file(path, [make_family("cycle", k) for k in range(3, 9)])
        a = select_graphs(quick_cfg(path, sample=3))
        b = select_graphs(quick_cfg(path, sample=3))
        assert a == b and len(a) == 3

    def test_failures_do_not_abort(self, tmp_path):
        path = tmp_path / "bad.g6"
        path.write_text(encode_graph6(make_family("path", 3)) + "\n")
        records, failures = sweep(quick_cfg(path))
        assert records and not failures


class TestCensus:
    def test_census_rows(self, tmp_path):
        path = tmp_path / "c.g6"
        write_graph6_file(path, [make_family("cycle", 5), ASYMMETRIC])
        rows = census(path)
        assert rows[0]["group_order"] == 10
        assert rows[0]["num_vertex_orbits"] == 1
        assert rows[1]["group_order"] == 1
        out = tmp_path / "census.csv"
        write_census(rows, out)
        assert read_census(out) == rows

    def test_load_corpus_lines_skips_header(self, tmp_path):
        path = tmp_path / "h.g6"
        path.write_text(">>graph6<<\nA_\n\nBw\n")
        assert load_corpus_lines(path) == [(2, "A_"), (4, "Bw")]


class TestReports:
    def test_summary_and_histogram_emission(self):
        rec = RunRecord(
            graph_id=1, graph6="A_", n=2, m=1, scheme="max-sym", p=1,
            num_params=2, num_gamma=1, num_beta=1, best_expectation=1.0,
            exact_maxcut=1, r=1.0, k=0.0, l=1.0, group_order=2,
            num_vertex_orbits=1, num_edge_orbits=1, flags="", restarts=3,
            evals=100, seed=42, f_ma=1.0, r_ma=1.0, num_params_ma=3,
        )
        summaries = aggregate([rec])
        text = summaries_to_csv(summaries)
        assert "max-sym" in text and "fraction_k_zero" in text
        hist_csv = histogram_to_csv(summaries["max-sym"].k_histogram)
        assert hist_csv.startswith("bin_left,count")
        svg = histogram_to_svg(summaries["max-sym"].k_histogram, "k")
        assert svg.startswith("<svg") and svg.endswith("</svg>")
