import csv
import io
import json
import math

import networkx as nx
import pytest

from kiteratio.cli import main
from kiteratio.formats import graph6_decode
from oracles import PAW_LAMBDA


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def _iso(a, b):
    ga, gb = nx.Graph(a.edges()), nx.Graph(b.edges())
    ga.add_nodes_from(range(a.n))
    gb.add_nodes_from(range(b.n))
    return nx.is_isomorphic(ga, gb)


def test_ratio_paw(capsys):
    [rec] = run_json(capsys, "ratio", "kite:2,3")
    assert rec["gamma"] == pytest.approx(PAW_LAMBDA, rel=1e-10)
    assert rec["lambda1"] == pytest.approx(PAW_LAMBDA, rel=1e-12)
    assert rec["min_vertex"] == 0 and rec["max_vertex"] == 1


def test_ratio_complete(capsys):
    [rec] = run_json(capsys, "ratio", "complete:6")
    assert rec["gamma"] == 1.0
    assert rec["epsilon"] == pytest.approx(0.0, abs=1e-12)


def test_ratio_star(capsys):
    [rec] = run_json(capsys, "ratio", "star:9")
    assert rec["gamma"] == pytest.approx(3.0, rel=1e-12)


def test_ratio_graph6_and_edge_list(capsys, tmp_path):
    [a] = run_json(capsys, "ratio", "Cr")  # graph6 of some 4-vertex graph
    path = tmp_path / "paw.txt"
    path.write_text("# the paw\nn 4\n0 1\n1 2\n2 3\n1 3\n")
    [b] = run_json(capsys, "ratio", "--input", str(path))
    assert b["gamma"] == pytest.approx(PAW_LAMBDA, rel=1e-10)
    assert a["n"] == 4


def test_ratio_disconnected(capsys):
    code, _, err = run(capsys, "ratio", "Cc")  # two disjoint edges
    assert code == 2
    assert "no path between vertices" in err


@pytest.mark.parametrize("argv", [
    ["ratio", "kite:2"],
    ["ratio", "blob:3"],
    ["ratio", "kite:2,3", "--tol", "0.1"],
    ["ratio", "kite:2,3", "--threads", "0"],
    ["ratio", "--input", "/nonexistent/graph.txt"],
    ["search", "--n", "9"],
    ["kiteopt", "--n", "4"],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and "error" in err


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["ratio", "--format", "xml", "kite:2,3"])
    assert exc.value.code == 2


def test_search_n5(capsys):
    [rec] = run_json(capsys, "search", "--n", "5", "--threads", "1")
    assert rec["graphs_scanned"] == 728
    assert rec["gamma"] == pytest.approx(rec["oracle_gamma"], rel=1e-9)
    assert rec["kite"] == "3,3"
    assert rec["log_gamma"] == pytest.approx(rec["kite_log_gamma"], abs=1e-8)


def test_search_n6(capsys):
    [rec] = run_json(capsys, "search", "--n", "6")
    assert rec["graphs_scanned"] == 26704
    assert rec["lambda_gt_nk"] is True


def test_search_graph6_catalog_matches_scan(capsys, tmp_path):
    # the graph atlas lists every graph up to 7 vertices, one per class
    atlas = [h for h in nx.graph_atlas_g() if h.number_of_nodes() == 7 and nx.is_connected(h)]
    assert len(atlas) == 853
    path = tmp_path / "n7.g6"
    path.write_text("".join(nx.to_graph6_bytes(h, header=False).decode() for h in atlas))
    [from_file] = run_json(capsys, "search", "--input", str(path))
    [from_scan] = run_json(capsys, "search", "--n", "7")
    assert from_file["graphs_scanned"] == 853
    assert _iso(graph6_decode(from_file["witness"]), graph6_decode(from_scan["witness"]))
    assert from_file["log_gamma"] == pytest.approx(from_scan["log_gamma"], abs=1e-10)


def test_csv_json_agree(capsys):
    [j] = run_json(capsys, "search", "--n", "5", "--seed", "3")
    code, out, _ = run(capsys, "search", "--n", "5", "--seed", "3", "--format", "csv")
    assert code == 0
    [c] = list(csv.DictReader(io.StringIO(out)))
    for key, value in j.items():
        if key == "wall_time_s":
            continue
        if isinstance(value, float):
            assert float(c[key]) == value, key
        elif isinstance(value, bool):
            assert c[key] == str(value).lower()
        elif value is not None:
            assert c[key] == str(value), key


def test_seeded_runs_reproducible(capsys):
    a = run_json(capsys, "search", "--n", "6", "--seed", "7", "--threads", "1")
    b = run_json(capsys, "search", "--n", "6", "--seed", "7", "--threads", "1")
    c = run_json(capsys, "search", "--n", "6", "--seed", "7", "--threads", "4")
    for rec in (a, b, c):
        rec[0].pop("wall_time_s")
    assert a == b == c


def test_kiteopt_rows(capsys):
    recs = run_json(capsys, "kiteopt", "--n", "100,200,500,1000")
    assert [r["n"] for r in recs] == [100, 200, 500, 1000]
    for r in recs:
        assert math.isfinite(r["s_over_n_log_n"]) and r["s_over_n_log_n"] > 0


def test_kiteopt_n5(capsys):
    [rec] = run_json(capsys, "kiteopt", "--n", "5")
    assert (rec["best_r"], rec["best_s"]) == (3, 3)


def test_kiteopt_table(capsys):
    recs = run_json(capsys, "kiteopt", "--n", "12", "--table")
    assert len(recs) == 12 - 3
    assert [r["s"] for r in recs] == list(range(3, 12))


def test_verify_kite_interval(capsys):
    recs = run_json(capsys, "verify", "lemma2")
    assert all(r["passed"] and r["margin"] > 0 for r in recs)


def test_verify_sigma_series(capsys):
    recs = run_json(capsys, "verify", "sigma-series")
    [rec] = [r for r in recs if r["check"] == "order=1 lambda=10"]
    err = float(rec["detail"].split()[0].split("=")[1])
    # leading omitted term is lambda^-3
    assert err == pytest.approx(10.0 ** -3, rel=0.05)


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "lemma99")
    assert code == 2 and "unknown suite" in err


def test_perturb_kite(capsys):
    [rec] = run_json(capsys, "perturb", "kite:6,4", "--edge", "4,6", "--tracked", "4")
    assert rec["delta1"] > 0
    assert rec["edge"] == [4, 6]


def test_perturb_round_trip(capsys):
    [rem] = run_json(capsys, "perturb", "kite:3,5", "--edge", "5,6", "--tracked", "0", "--remove")
    [add] = run_json(capsys, "perturb", rem_graph6(), "--edge", "5,6", "--tracked", "0")
    assert add["gamma_after"] == pytest.approx(rem["gamma_before"], abs=2e-8)


def rem_graph6():
    from kiteratio.formats import graph6_encode
    from kiteratio.graph import make_kite
    return graph6_encode(make_kite(3, 5).without_edge(5, 6))


@pytest.mark.parametrize("edge", ["a-b", "1", "1,2,3"])
def test_perturb_malformed_edge(capsys, edge):
    code, _, err = run(capsys, "perturb", "kite:6,4", "--edge", edge, "--tracked", "1")
    assert code == 2 and "malformed edge" in err


def test_perturb_present_edge(capsys):
    code, _, _ = run(capsys, "perturb", "kite:6,4", "--edge", "0,1", "--tracked", "1")
    assert code == 2


def test_output_file(capsys, tmp_path):
    out = tmp_path / "r.csv"
    code, stdout, _ = run(capsys, "ratio", "cycle:5", "--format", "csv", "--output", str(out))
    assert code == 0 and stdout == ""
    assert out.read_text().startswith("n,edges,graph6")


def test_plain_format(capsys):
    code, out, _ = run(capsys, "ratio", "path:3")
    assert code == 0
    fields = dict(line.split(None, 1) for line in out.splitlines())
    assert float(fields["gamma"]) == pytest.approx(math.sqrt(2), rel=1e-11)
    assert fields["min_vertex"] == "0"
