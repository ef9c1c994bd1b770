import json
from pathlib import Path

import pytest

from src.labeled_simplicity.cli import EXIT_ERROR, EXIT_OK, EXIT_OUT_OF_SCOPE, main

FIXTURES_DIR = Path(__file__).resolve().parents[2] / "fixtures"


@pytest.fixture(autouse=True)
def _quiet_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ("ATOM_CAP", "BRUTEFORCE_ATOM_CAP", "FUZZ_EDGE_DENSITY", "FUZZ_OUT_DIR", "LOOP_MAX_LEN_CAP"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("LOG_LEVEL", "WARNING")


def _fixture(name: str) -> str:
    return str(FIXTURES_DIR / f"{name}.lg")


def test_analyze_prints_text_report(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", _fixture("G2")]) == EXIT_OK

    out = capsys.readouterr().out
    assert "simple: yes" in out
    assert "condition (c): yes" in out


def test_analyze_json_report(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", _fixture("G3"), "--json"]) == EXIT_OK

    report = json.loads(capsys.readouterr().out)
    assert report["simple"] is False
    assert report["atoms"]["stabilization_level"] == 2
    assert report["witnesses"]["disagreeable"] == {"set": ["v1"], "word": "aab"}


def test_analyze_honors_max_loop_len(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", _fixture("G10"), "--json", "--max-loop-len", "1"]) == EXIT_OK

    loops = json.loads(capsys.readouterr().out)["loops"]
    assert loops["max_len"] == 1
    assert [record["exits"] for record in loops["records"]] == [["II"], ["I"]]


def test_analyze_rejects_loop_length_above_cap(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", _fixture("G1"), "--max-loop-len", "9"]) == EXIT_ERROR

    assert "loop_max_len_cap exceeded: limit=4 (observed 9)" in capsys.readouterr().err


def test_analyze_verifies_witnesses(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", _fixture("G9"), "--verify-witness"]) == EXIT_OK

    assert "witness check failed" not in capsys.readouterr().err


def test_analyze_reports_out_of_scope_graph(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", _fixture("G7")]) == EXIT_OUT_OF_SCOPE

    assert capsys.readouterr().out.strip() == "outside theorem scope (not weakly left-resolving)"


def test_analyze_rejects_malformed_graph(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    path = tmp_path / "broken.lg"
    path.write_text("vertices: v\nedge v a w\n", encoding="utf-8")

    assert main(["analyze", str(path)]) == EXIT_ERROR

    assert "error: line 2: undeclared vertex 'w' in edge" in capsys.readouterr().err


def test_analyze_missing_file(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["analyze", str(tmp_path / "absent.lg")]) == EXIT_ERROR

    assert "error:" in capsys.readouterr().err


def test_atoms_command(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["atoms", _fixture("G3")]) == EXIT_OK

    assert capsys.readouterr().out.splitlines() == [
        "stabilization level: 2",
        "{v1}",
        "{v2}",
        "{v3}",
    ]


def test_fuzz_rejects_zero_count(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["fuzz", "--n", "0", "--max-vertices", "3"]) == EXIT_ERROR

    assert "must be >= 1" in capsys.readouterr().err


def test_fuzz_single_vertex_run(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    out_dir = tmp_path / "dumps"

    code = main(["fuzz", "--n", "1", "--max-vertices", "1", "--seed", "7", "--out", str(out_dir)])

    assert code == EXIT_OK
    summary = json.loads(capsys.readouterr().out)
    assert summary["requested"] == 1
    assert summary["checked"] == 1
    assert summary["violations"] == 0
    assert not out_dir.exists()


def test_fuzz_trivial_labeling_summary(tmp_path: Path, capsys: pytest.CaptureFixture[str]) -> None:
    argv = ["fuzz", "--n", "20", "--max-vertices", "4", "--seed", "43", "--trivial-labeling", "--out", str(tmp_path)]

    assert main(argv) == EXIT_OK

    summary = json.loads(capsys.readouterr().out)
    assert summary["checked"] == 20
    assert summary["discarded_non_wlr"] == 0
    assert "trivial_labeling_condition_l" not in summary["skipped_checks"]


def test_missing_subcommand_is_an_error() -> None:
    assert main([]) == EXIT_ERROR


def test_bad_configuration_is_an_error(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("ATOM_CAP", "0")

    assert main(["atoms", _fixture("G1")]) == EXIT_ERROR

    assert "ATOM_CAP must be >= 1" in capsys.readouterr().err
