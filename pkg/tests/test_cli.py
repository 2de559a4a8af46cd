import json
import subprocess
import sys

from engelgraph.cli import main


def test_report_command(tmp_path, capsys):
    json_path = tmp_path / "s3.json"
    dot_path = tmp_path / "s3.dot"
    code = main(
        ["report", "--group", "S3", "--json", str(json_path), "--dot", str(dot_path)]
    )
    assert code == 0
    out = capsys.readouterr().out
    data = json.loads(out)
    assert data["name"] == "S3" and data["cliqueNumber"] == 3
    assert json_path.read_text() == out
    dot = dot_path.read_text()
    assert dot.startswith("graph {") and dot.count("--") == 3


def test_report_engel_group_writes_empty_dot(tmp_path, capsys):
    dot_path = tmp_path / "c6.dot"
    code = main(["report", "--group", "C6", "--dot", str(dot_path)])
    assert code == 0
    assert dot_path.read_text() == "graph {\n}\n"
    assert "Engel group" in capsys.readouterr().err


def test_report_rejects_bad_spec(capsys):
    assert main(["report", "--group", "D7"]) == 2
    assert "error" in capsys.readouterr().err


def test_usage_error_exit_code(capsys):
    assert main([]) == 2
    assert main(["report"]) == 2
    capsys.readouterr()


def test_survey_command(tmp_path, capsys):
    out_dir = tmp_path / "reports"
    code = main(["survey", "--max-order", "12", "--out", str(out_dir)])
    assert code == 0
    printed = capsys.readouterr().out
    assert "surveyed" in printed and "diameter histogram" in printed
    files = sorted(p.name for p in out_dir.iterdir())
    assert files == [
        "A4.json",
        "D12.json",
        "Dic3.json",
        "S3.json",
        "S3xC2.json",
        "summary.json",
    ]
    summary = json.loads((out_dir / "summary.json").read_text())
    assert summary["maxOrder"] == 12


def test_survey_reruns_are_byte_identical(tmp_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert main(["survey", "--max-order", "12", "--out", str(first)]) == 0
    assert main(["survey", "--max-order", "12", "--jobs", "2", "--out", str(second)]) == 0
    for path in sorted(first.iterdir()):
        assert path.read_bytes() == (second / path.name).read_bytes()


def test_verify_command(capsys):
    assert main(["verify", "--max-order", "12"]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 6
    assert "FAIL" not in out


def test_verify_bad_bound(capsys):
    assert main(["verify", "--max-order", "3"]) == 2
    capsys.readouterr()


def test_console_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "engelgraph.cli", "report", "--group", "S3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["name"] == "S3"
