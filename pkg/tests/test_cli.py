"""Command-line interface: outputs, schemas, and exit codes."""

import json
import math

import pytest

from sgraph import cli, sgio
from sgraph.errors import ConvergenceFailureError
from sgraph.extremal import extremal_graph


def run(capsys, *argv) -> tuple[int, str, str]:
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def g33_path(tmp_path):
    g, _ = extremal_graph(3, 3)
    path = tmp_path / "g33.sg"
    sgio.dump(g, path)
    return str(path)


class TestSpectrum:
    def test_extremal_3_3(self, capsys, g33_path):
        code, out, _ = run(capsys, "spectrum", g33_path)
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1
        assert abs(doc["lambda1"] - math.sqrt(3)) < 1e-9
        assert abs(doc["rho"] - math.sqrt(3)) < 1e-9

    def test_empty_graph(self, capsys, tmp_path):
        path = tmp_path / "empty.sg"
        path.write_text("sg 4 0\n")
        code, out, _ = run(capsys, "spectrum", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["eigenvalues"] == [0.0] * 4

    def test_malformed_header_exit_2(self, capsys, tmp_path):
        path = tmp_path / "bad.sg"
        path.write_text("sg nope 3\n")
        code, _, err = run(capsys, "spectrum", str(path))
        assert code == 2
        assert "line 1" in err

    def test_convergence_failure_exit_3(self, capsys, g33_path, monkeypatch):
        def boom(_):
            raise ConvergenceFailureError("synthetic")

        monkeypatch.setattr(cli, "graph_spectrum", boom)
        code, _, err = run(capsys, "spectrum", g33_path)
        assert code == 3


class TestCheck:
    def test_extremal_4_5(self, capsys, tmp_path):
        g, _ = extremal_graph(4, 5)
        path = tmp_path / "g45.sg"
        sgio.dump(g, path)
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["balanced"] is False
        assert doc["neg_c4"] is None
        assert doc["girth_neg"] == 6
        assert doc["bipartite"] is True and doc["sides"] == [4, 5]

    def test_all_positive_k33(self, capsys, tmp_path):
        edges = [(u, v, 1) for u in range(3) for v in range(3, 6)]
        from sgraph import SignedGraph

        path = tmp_path / "k33.sg"
        sgio.dump(SignedGraph.from_edge_list(6, edges), path)
        code, out, _ = run(capsys, "check", str(path))
        assert code == 0
        doc = json.loads(out)
        assert doc["balanced"] is True and doc["girth_neg"] is None

    def test_k22_one_negative_witness(self, capsys, tmp_path):
        from sgraph import SignedGraph

        g = SignedGraph.from_edge_list(
            4, [(0, 2, -1), (0, 3, 1), (1, 2, 1), (1, 3, 1)]
        )
        path = tmp_path / "k22.sg"
        sgio.dump(g, path)
        code, out, _ = run(capsys, "check", str(path))
        doc = json.loads(out)
        assert doc["neg_c4"]["sign"] == -1
        assert len(doc["neg_c4"]["vertices"]) == 4


class TestConstruct:
    def test_3_3_file(self, capsys, tmp_path):
        out_path = tmp_path / "out.sg"
        code, _, _ = run(capsys, "construct", "3", "3", str(out_path))
        assert code == 0
        g = sgio.load(out_path)
        assert g.n == 6 and g.m == 6
        assert sum(1 for *_, s in g.edges if s == -1) == 1

    def test_3_4_edge_count(self, capsys, tmp_path):
        out_path = tmp_path / "out.sg"
        code, _, _ = run(capsys, "construct", "3", "4", str(out_path))
        assert code == 0
        assert sgio.load(out_path).m == 8

    def test_bad_params_exit_4(self, capsys, tmp_path):
        code, _, err = run(capsys, "construct", "2", "5", str(tmp_path / "x.sg"))
        assert code == 4


class TestBound:
    def test_sizes(self, capsys):
        code, out, _ = run(capsys, "bound", "--r", "3", "--s", "4")
        assert code == 0
        assert abs(float(out) - math.sqrt(5)) < 1e-12

    def test_order_even(self, capsys):
        code, out, _ = run(capsys, "bound", "--n", "8")
        assert code == 0
        assert abs(float(out) - (2 + math.sqrt(84)) / 4) < 1e-12

    def test_order_json(self, capsys):
        code, out, _ = run(capsys, "bound", "--n", "9", "--json")
        doc = json.loads(out)
        assert doc["schema"] == 1 and doc["branch"] == "odd-n"
        assert abs(doc["gap"]) < 1e-9

    def test_small_n_exit_4(self, capsys):
        code, _, _ = run(capsys, "bound", "--n", "5")
        assert code == 4

    def test_conflicting_params_exit_4(self, capsys):
        code, _, _ = run(capsys, "bound", "--n", "8", "--r", "3", "--s", "4")
        assert code == 4


class TestVerify:
    def test_sizes_3_3(self, capsys):
        code, out, _ = run(capsys, "verify", "sizes", "3", "3")
        assert code == 0
        doc = json.loads(out)
        assert doc["schema"] == 1 and doc["verdict"] == "CONFIRMED"

    def test_order_6(self, capsys):
        code, out, _ = run(capsys, "verify", "order", "6")
        assert code == 0
        assert json.loads(out)["verdict"] == "CONFIRMED"

    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "verify", "sizes", "3", "3", "--csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0].startswith("schema,r,s,")
        assert lines[1].startswith("1,3,3,")

    def test_budget_exit_5(self, capsys):
        code, _, err = run(capsys, "verify", "sizes", "4", "5")
        assert code == 5

    def test_missing_s_exit_4(self, capsys):
        code, _, _ = run(capsys, "verify", "sizes", "3")
        assert code == 4

    def test_byte_identical_across_runs(self, capsys):
        _, out1, _ = run(capsys, "verify", "sizes", "3", "3", "--jobs", "2")
        _, out2, _ = run(capsys, "verify", "sizes", "3", "3")
        assert out1 == out2
        _, csv1, _ = run(capsys, "verify", "sizes", "3", "3", "--csv")
        _, csv2, _ = run(capsys, "verify", "sizes", "3", "3", "--csv")
        assert csv1 == csv2


class TestByteDeterminism:
    def test_spectrum_and_check(self, capsys, g33_path):
        outs = set()
        for _ in range(2):
            _, out, _ = run(capsys, "spectrum", g33_path)
            outs.add(out)
            _, out, _ = run(capsys, "check", g33_path)
            outs.add(out)
        assert len(outs) == 2
