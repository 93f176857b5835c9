import json
import logging

import pandas as pd

from cskit.errors import EXIT_COUNTEREXAMPLE, EXIT_OK, EXIT_USAGE
from cskit.main import main
from cskit.services.verify import SUITES, Outcome


def test_classify_json_is_deterministic(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert main(["classify", "A3", "--format", "json", "--out", str(first), "--no-cache"]) == EXIT_OK
    assert main(["classify", "A3", "--format", "json", "--out", str(second), "--no-cache"]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()

    records = json.loads(first.read_text())
    assert len(records) == 24
    assert all(r["schema"] == 1 for r in records)
    assert records[0]["one_line"] == "1234"


def test_classify_csv(tmp_path):
    out = tmp_path / "b2.csv"
    assert main(["classify", "B2", "--format", "csv", "--out", str(out)]) == EXIT_OK
    frame = pd.read_csv(out)
    assert len(frame) == 8
    assert (frame["schema"] == 1).all()
    assert frame["type"].unique().tolist() == ["B2"]


def test_verify_reports(tmp_path):
    out = tmp_path / "report.json"
    assert main(["verify", "bool-lattice", "A3", "--out", str(out)]) == EXIT_OK
    report = json.loads(out.read_text())
    assert report["passed"] is True
    assert report["property"] == "bool-lattice"
    assert report["counterexamples"] == []


def test_verify_exit_code_on_counterexample(tmp_path, monkeypatch):
    def always_wrong(w, table):
        out = Outcome()
        out.check(False, "planted")
        return out

    monkeypatch.setitem(SUITES, "carrell", always_wrong)
    assert main(["verify", "carrell", "A2", "--out", str(tmp_path / "r.json")]) == EXIT_COUNTEREXAMPLE


def test_usage_errors(capsys):
    assert main(["verify", "no-such-property", "A3"]) == EXIT_USAGE
    assert main(["classify", "Q3"]) == EXIT_USAGE
    assert main(["classify", "E9"]) == EXIT_USAGE
    assert main(["classify", "E6"]) == EXIT_USAGE
    assert main(["inspect", "A3", "--oneline", "4421"]) == EXIT_USAGE
    assert "error:" in capsys.readouterr().err


def test_inspect_a5_worked_example(capsys):
    assert main(["inspect", "A5", "--word", "2,4,5,3,4,2,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "length: 7" in out
    assert "left_descents: [2, 4]" in out
    assert "J(word): {2,4}" in out
    assert "J = {2,4}: spherical=True" in out
    assert "l(w)=7 l(w0J)=2 l(c)=5 dim_condition=True" in out


def test_inspect_4231(capsys):
    assert main(["inspect", "A3", "--oneline", "4231"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "smooth X_w: false" in out
    assert "smooth toric X_c^-1 P_J: false" in out
    assert "Poincare polynomial of X_c^-1 P_J: 1 + q + 2q^2 + q^3" in out
    assert "consistent: True" in out


def test_inspect_non_reduced_word(capsys, caplog):
    with caplog.at_level(logging.WARNING):
        assert main(["inspect", "A2", "--word", "1,1"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "reduced: False" in out
    assert "element:" not in out
    assert "not reduced" in caplog.text


def test_interval_json_and_dot(tmp_path, capsys):
    out = tmp_path / "interval.json"
    assert main(["interval", "A2", "--word", "1,2", "--format", "json", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert len(data["nodes"]) == 4 and len(data["edges"]) == 4

    assert main(["interval", "A3", "--oneline", "2413", "--parabolic", "1,3"]) == EXIT_OK
    assert capsys.readouterr().out.count("->") == 5


def test_cache_commands(cache_dir, capsys):
    assert main(["cache", "status"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == []

    assert main(["classify", "A2", "--out", str(cache_dir.parent / "a2.json")]) == EXIT_OK
    assert main(["cache", "status"]) == EXIT_OK
    status = json.loads(capsys.readouterr().out)
    assert [s["type"] for s in status] == ["A2"]

    assert main(["cache", "clear"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out) == {"removed": 1}


def test_cache_commands_need_a_directory():
    assert main(["cache", "status"]) == EXIT_USAGE


def test_inspect_json(capsys):
    assert main(["inspect", "A5", "--word", "2,4,5,3,4,2,1", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1
    assert data["reduced"] is True
    assert data["record"]["one_line"] == "513624"
    strict = [v for v in data["verdicts"] if v["J"] == [2, 4] and not v["relaxed"]]
    assert strict == [
        {
            "schema": 1,
            "J": [2, 4],
            "holds": True,
            "relaxed": False,
            "coxeter_part_word": strict[0]["coxeter_part_word"],
            "l_w": 7,
            "l_w0J": 2,
            "l_c": 5,
            "dim_condition": True,
        }
    ]
    assert len(strict[0]["coxeter_part_word"]) == 5

    assert main(["inspect", "A2", "--word", "1,1", "--format", "json"]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data["reduced"] is False and data["record"] is None
