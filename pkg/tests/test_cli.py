from __future__ import annotations

import json

import pytest

from pgx.cli import main


def _json(capsys):
    out = capsys.readouterr().out
    assert out.endswith("\n")
    return json.loads(out)


@pytest.mark.parametrize("spec, delta", [("Q8", "1"), ("Heis(3)", "5"), ("C3^3", "14")])
def test_count_json(capsys, spec, delta):
    assert main(["count", spec, "--json"]) == 0
    data = _json(capsys)
    assert data["totals"]["delta"] == delta
    if spec == "Heis(3)":
        assert data["s"] == ["1", "13", "4", "1"]


def test_count_table(capsys):
    assert main(["count", "D8"]) == 0
    out = capsys.readouterr().out
    assert "total s = 10, c = 7, delta = 3" in out


def test_count_parse_error(capsys):
    assert main(["count", "C6"]) == 2
    assert "not a prime power" in capsys.readouterr().err


def test_count_cap_error():
    assert main(["count", "C2^12"]) == 2


def test_lattice_export(tmp_path):
    path = tmp_path / "d8.json"
    assert main(["lattice", "D8", "--export", str(path)]) == 0
    data = json.loads(path.read_text(encoding="utf-8"))
    assert len(data["subgroups"]) == 10
    assert main(["lattice", "C2^2", "--export", str(path)]) == 0
    assert json.loads(path.read_text(encoding="utf-8"))["counts"]["s"] == ["1", "3", "1"]


def test_lattice_export_bad_path(tmp_path):
    assert main(["lattice", "D8", "--export", str(tmp_path / "missing" / "x.json")]) == 2


def test_usage_errors():
    with pytest.raises(SystemExit) as info:
        main(["verify"])
    assert info.value.code == 2
    assert main(["verify", "nope"]) == 2


def test_verify_pass_and_fail(capsys, tmp_path):
    assert main(["verify", "lem2.6", "--max-n", "4", "--json", "--cache", str(tmp_path)]) == 0
    data = _json(capsys)
    assert list(data)[:3] == ["check_id", "status", "domain"] and data["status"] == "Pass"
    assert main(["verify", "prop3.1", "--p", "3", "--max-n", "4"]) == 1
    assert "witnesses: (C3^3):C3" in capsys.readouterr().out


def test_checks_listing(capsys):
    assert main(["checks"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert len(lines) >= 16 and lines[0].startswith("thm1.1")


def test_goursat(capsys):
    assert main(["goursat", "C2", "C2"]) == 0
    data = _json(capsys)
    assert data["count"] == "5" and len(data["quintuples"]) == 5
