from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from twoeig.cli import main, read_matrix, write_matrix


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestClassifyCommand:
    def test_dsl_minimal(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--dsl", "(K1+K1)*(K1+K1)")
        assert code == 0
        obj = json.loads(out)
        assert obj["verdict"] == "MINIMAL_N2_2"
        assert obj["schema"] == 1
        assert obj["q_upper_bound"] == 2

    def test_dsl_paw(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--dsl", "(K1+K2)*K1")
        assert code == 0
        assert json.loads(out)["verdict"] == "NO_BIPARTITION_QGE3"

    def test_g6_batch(self, capsys, tmp_path):
        src = tmp_path / "graphs.g6"
        src.write_text("C~\nBw\nC]\n", encoding="utf-8")
        code, out, _ = run_cli(capsys, "classify", "--g6", str(src))
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 3
        verdicts = [json.loads(line)["verdict"] for line in lines]
        assert verdicts == [
            "COMPLETE_PLUS_ISOLATED_N1_1",
            "COMPLETE_PLUS_ISOLATED_N1_1",
            "MINIMAL_N2_2",
        ]
        assert [json.loads(line)["line"] for line in lines] == [1, 2, 3]

    def test_g6_bad_line_exits_2(self, capsys, tmp_path):
        src = tmp_path / "graphs.g6"
        src.write_text("C~\nB\x7f\n", encoding="utf-8")
        code, _, err = run_cli(capsys, "classify", "--g6", str(src))
        assert code == 2
        assert "line 2" in err

    def test_edges_input(self, capsys, tmp_path):
        src = tmp_path / "g.edges"
        src.write_text("3 0 1 1 2", encoding="utf-8")
        code, out, _ = run_cli(capsys, "classify", "--edges", str(src))
        assert code == 0
        assert json.loads(out)["verdict"] == "NO_BIPARTITION_QGE3"

    def test_deterministic_output(self, capsys):
        _, out1, _ = run_cli(capsys, "classify", "--dsl", "(K2+K3)*(K1+K4)")
        _, out2, _ = run_cli(capsys, "classify", "--dsl", "(K2+K3)*(K1+K4)")
        assert out1 == out2

    def test_text_mode(self, capsys):
        code, out, _ = run_cli(capsys, "classify", "--text", "--dsl", "K3")
        assert code == 0
        assert "COMPLETE_PLUS_ISOLATED_N1_1" in out

    def test_bad_dsl_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--dsl", "(K1")
        assert code == 2
        assert "input error" in err


class TestConstructCommand:
    def test_minimal_construct(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "construct", "--dsl", "(K2+K3)*(K1+K4)", "--out", str(tmp_path)
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["verify"]["verdict"] == "pass"
        assert obj["verify"]["mult_neg1"] == 2
        assert len(obj["u"]) == 10
        witness = json.loads((tmp_path / "witness.json").read_text())
        assert witness["verdict"] == "MINIMAL_N2_2"
        matrix = read_matrix(tmp_path / "matrix.txt")
        assert matrix.shape == (10, 10)
        assert float(np.abs(matrix @ matrix - np.eye(10)).max()) < 1e-8

    def test_n1_1_construct(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "construct", "--dsl", "K5", "--out", str(tmp_path))
        assert code == 0
        obj = json.loads(out)
        assert obj["verdict"] == "COMPLETE_PLUS_ISOLATED_N1_1"
        assert obj["verify"]["mult_neg1"] == 4
        assert "u" not in obj

    def test_not_constructible_exits_3(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "construct", "--dsl", "(K1+K1)*K1", "--out", str(tmp_path)
        )
        assert code == 3
        obj = json.loads(out)
        assert obj["constructible"] is False
        assert obj["verdict"] == "NO_BIPARTITION_QGE3"

    def test_disconnected_construct(self, capsys, tmp_path):
        code, out, _ = run_cli(capsys, "construct", "--dsl", "K2+K3", "--out", str(tmp_path))
        assert code == 0
        obj = json.loads(out)
        assert obj["verify"]["verdict"] == "pass"
        assert obj["verify"]["mult_neg1"] == 3


class TestVerifyCommand:
    def test_roundtrip(self, capsys, tmp_path):
        run_cli(capsys, "construct", "--dsl", "(K1+K1)*(K1+K1)", "--out", str(tmp_path))
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--dsl",
            "(K1+K1)*(K1+K1)",
            "--witness",
            str(tmp_path / "witness.json"),
        )
        assert code == 0
        assert json.loads(out)["verdict"] == "pass"

    def test_tampered_matrix_fails(self, capsys, tmp_path):
        run_cli(capsys, "construct", "--dsl", "(K1+K1)*(K1+K1)", "--out", str(tmp_path))
        matrix = read_matrix(tmp_path / "matrix.txt")
        matrix[0, 1] += 1e-3
        matrix[1, 0] += 1e-3
        write_matrix(tmp_path / "matrix.txt", matrix)
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--dsl",
            "(K1+K1)*(K1+K1)",
            "--witness",
            str(tmp_path / "witness.json"),
        )
        assert code == 1
        assert json.loads(out)["verdict"] == "fail"

    def test_wrong_graph_fails(self, capsys, tmp_path):
        run_cli(capsys, "construct", "--dsl", "(K1+K1)*(K1+K1)", "--out", str(tmp_path))
        code, out, _ = run_cli(
            capsys,
            "verify",
            "--edges",
            str(write_edges(tmp_path, "4 0 1 1 2 2 3")),
            "--witness",
            str(tmp_path / "witness.json"),
        )
        assert code == 1
        assert json.loads(out)["pattern_ok"] is False


def write_edges(tmp_path: Path, text: str) -> Path:
    p = tmp_path / "g.edges"
    p.write_text(text, encoding="utf-8")
    return p


class TestOtherCommands:
    def test_cotree(self, capsys):
        code, out, _ = run_cli(capsys, "cotree", "--dsl", "K2")
        assert code == 0
        assert json.loads(out)["cotree"]["kind"] == "join"

    def test_cotree_p4(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "cotree", "--edges", str(write_edges(tmp_path, "4 0 1 1 2 2 3"))
        )
        assert code == 0
        assert json.loads(out)["p4_witness"] == [0, 1, 2, 3]

    def test_bound(self, capsys, tmp_path):
        code, out, _ = run_cli(
            capsys, "bound", "--edges", str(write_edges(tmp_path, "5 0 1 1 2 2 3 3 4"))
        )
        assert code == 0
        assert json.loads(out)["unique_path_bound"] == 5

    def test_selftest_small(self, capsys):
        code, out, _ = run_cli(capsys, "selftest", "--max-n", "4", "--seed", "7", "--cases", "20")
        assert code == 0
        assert "verdict agreement 100.0%" in out
        assert "20/20 verified" in out

    def test_matrix_io_roundtrip(self, tmp_path):
        rng = np.random.default_rng(1)
        m = rng.standard_normal((5, 5))
        m = m + m.T
        write_matrix(tmp_path / "m.txt", m)
        assert np.array_equal(read_matrix(tmp_path / "m.txt"), m)

    def test_missing_file_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "classify", "--g6", "/nonexistent/path.g6")
        assert code == 2
