import json

import pytest

from ncsf.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_kostka_csv(capsys):
    code, out, _ = _run(capsys, "kostka", "--n", "3", "--family", "qt", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == ",3,2.1,1.2,1.1.1"
    assert lines[3] == '1.2,1,"q_{2,1}","t_{1,1}","q_{2,1}*t_{1,1}"'


def test_product_four_terms(capsys):
    code, out, _ = _run(capsys, "product", "--family", "qt", "--left", "2", "--right", "2")
    assert code == 0
    assert list(json.loads(out)) == ["H_4", "H_3.1", "H_2.2", "H_2.1.1"]


def test_global_options_after_subcommand(capsys):
    a = _run(capsys, "--format", "csv", "nabla", "--lambda", "2")
    b = _run(capsys, "nabla", "--lambda", "2", "--format", "csv")
    assert a == b and a[0] == 0


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "quasidet", "--max-n", "3", "--seed", "5"],
    ["quasidet", "--comp", "2,1", "--factored"],
    ["expand", "--comp", "1.2", "--family", "bz", "--dual"],
])
def test_deterministic(capsys, argv):
    assert _run(capsys, *argv) == _run(capsys, *argv)


def test_seed_from_environment(capsys, monkeypatch):
    explicit = _run(capsys, "verify", "--suite", "det", "--max-n", "2", "--seed", "7")
    monkeypatch.setenv("NCSF_SEED", "7")
    assert _run(capsys, "verify", "--suite", "det", "--max-n", "2") == explicit


def test_out_file(capsys, tmp_path):
    target = tmp_path / "k.json"
    code, out, _ = _run(capsys, "kostka", "--n", "2", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["entries"] == [["1", "q_{1,1}"], ["1", "t_{1,1}"]]


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    ["kostka", "--n", "3", "--bogus"],
    ["kostka"],
    ["expand", "--comp", "2,0"],
    ["hookcheck", "--n", "3", "--k", "3"],
    ["nabla"],
    ["kostka", "--n", "40"],
    ["verify", "--max-n", "0"],
])
def test_usage_errors(capsys, argv):
    code, _, err = _run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_verify_reports_discrepancies_with_exit_zero(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "bilinear", "--max-n", "2")
    statuses = {r["suite"]: r["status"] for r in json.loads(out)}
    assert statuses["bz-bracket[n=2]"] == "discrepancy"
    assert code == 0


def test_verify_all_small(capsys):
    code, out, _ = _run(capsys, "verify", "--max-n", "3", "--format", "csv")
    assert code == 0
    assert ",fail," not in out
