from symqaoa.cli import main
from symqaoa.graphs import make_family, write_graph6_file


def test_gen_corpus(tmp_path, capsys):
    out = tmp_path / "c.g6"
    assert main(["gen-corpus", "--n", "4", "--out", str(out)]) == 0
    assert len(out.read_text().splitlines()) == 6  # connected graphs on 4 vertices


def test_symmetry_census(tmp_path):
    corpus = tmp_path / "g.g6"
    write_graph6_file(corpus, [make_family("cycle", 5)])
    out = tmp_path / "census.csv"
    assert main(["symmetry", "--graphs", str(corpus), "--out", str(out)]) == 0
    assert "10" in out.read_text()


def test_maxcut(tmp_path, capsys):
    corpus = tmp_path / "g.g6"
    write_graph6_file(corpus, [make_family("star", 5)])
    assert main(["maxcut", "--graphs", str(corpus)]) == 0
    assert ",4," in capsys.readouterr().out


def test_sweep_and_aggregate(tmp_path, capsys):
    corpus = tmp_path / "g.g6"
    write_graph6_file(corpus, [make_family("star", 6)])
    res = tmp_path / "res.csv"
    assert main([
        "sweep", "--graphs", str(corpus), "--schemes", "max-sym,rand-group",
        "--restarts", "3", "--seed", "1", "--out", str(res),
    ]) == 0
    summary = tmp_path / "summary.csv"
    hists = tmp_path / "hists"
    assert main([
        "aggregate", "--in", str(res), "--out", str(summary),
        "--histograms", str(hists),
    ]) == 0
    assert summary.exists()
    assert (hists / "max-sym_k.svg").exists()
    assert (hists / "rand-group_r_diff.csv").exists()


def test_error_exit_code(tmp_path, capsys):
    assert main(["maxcut", "--graphs", str(tmp_path / "missing.g6")]) == 1
