import json
import subprocess
import sys

import pytest

from asymknuth.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def csv_values(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return {row.split(",")[0]: row.split(",")[1] for row in lines[1:]}


def test_exact(capsys):
    code, out, _ = run(capsys, "exact", "--d", "2", "--N", "6")
    assert code == 0
    assert out.startswith("# schema=1\nquantity,value,log10\n")
    assert csv_values(out) == {"S": "132", "rectangle": "132", "E": "0"}
    assert csv_values(run(capsys, "exact", "--d", "3", "--N", "3")[1]) == {"S": "6", "rectangle": "5", "E": "1"}
    assert csv_values(run(capsys, "exact", "--d", "1", "--N", "5")[1])["S"] == "1"


def test_exact_json_and_big_integers(capsys):
    code, out, _ = run(capsys, "exact", "--d", "3", "--N", "120", "--format", "json")
    report = json.loads(out)
    assert code == 0
    assert int(report["S"]) == int(report["rectangle"]) + int(report["E"])
    assert len(report["S"]) > 50


def test_converge_main(capsys):
    code, out, _ = run(capsys, "converge", "--kind", "main", "--d", "3", "--ladder", "5,10,20,40")
    rows = [ln.split(",") for ln in out.splitlines()[2:]]
    assert code == 0 and len(rows) == 4
    errs = [float(r[3]) - 1 for r in rows]
    assert all(a > b > 0 for a, b in zip(errs, errs[1:]))
    code, out, _ = run(capsys, "converge", "--kind", "main", "--d", "2", "--ladder", "5,10")
    assert [float(ln.split(",")[3]) for ln in out.splitlines()[2:]] == [1.0, 1.0]


def test_converge_lemma(capsys):
    code, out, _ = run(capsys, "converge", "--kind", "lemma", "--d", "2", "--dev", "1,-1",
                       "--ladder", "1e3,1e4,1e5,1e6")
    last = out.splitlines()[-1].split(",")
    assert code == 0 and last[0] == "1000000"
    assert abs(float(last[3]) - 1) < 0.01


def test_converge_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["converge", "--kind", "bogus", "--d", "2", "--ladder", "5"])
    assert exc.value.code == 2
    assert run(capsys, "converge", "--kind", "lemma", "--d", "2", "--ladder", "5")[0] == 2
    assert run(capsys, "converge", "--kind", "theorem6", "--d", "2", "--ladder", "5",
               "--alpha", "3", "--beta", "2")[0] == 2
    with pytest.raises(SystemExit) as exc:
        main(["converge", "--kind", "main", "--d", "2", "--ladder", "0.5"])
    assert exc.value.code == 2


def test_mehta(capsys):
    code, out, _ = run(capsys, "mehta", "--d", "2", "--beta", "2", "--samples", "1000000", "--seed", "7")
    report = json.loads(out)
    assert code == 0 and abs(report["z"]) < 3
    assert report["estimate"]["samples"] == 1_000_000
    code, out, _ = run(capsys, "mehta", "--d", "1", "--beta", "2")
    report = json.loads(out)
    assert report["psi"] == pytest.approx(1.7724538509055159)
    assert report["estimate"] is None and "skipped" in report["note"]
    code, out, _ = run(capsys, "mehta", "--d", "3", "--beta", "4", "--samples", "1000000", "--seed", "7")
    assert abs(json.loads(out)["z"]) < 3


def test_mehta_sample_floor_is_usage_error(capsys):
    assert run(capsys, "mehta", "--d", "2", "--beta", "2", "--samples", "10")[0] == 2


def test_oracle_and_involutions(capsys):
    code, out, _ = run(capsys, "oracle", "--d", "3", "--N", "4")
    assert code == 0 and out.splitlines()[-1].endswith(",23,23,OK")
    code, out, _ = run(capsys, "involutions", "--d", "2", "--n", "1")
    assert code == 0 and out.splitlines()[-1].endswith(",2,2,2,OK")
    code, _, err = run(capsys, "oracle", "--d", "2", "--N", "12")
    assert code == 3 and "guard" in err
    assert run(capsys, "involutions", "--d", "3", "--n", "2")[0] == 3


def test_oracle_mismatch_exits_4(capsys, monkeypatch):
    import asymknuth.cli as cli

    monkeypatch.setattr(cli, "s_exact", lambda d, N: 0)
    code, out, err = run(capsys, "oracle", "--d", "3", "--N", "4")
    assert code == 4 and "MISMATCH" in out


def test_output_file_and_determinism(tmp_path, capsys):
    target = tmp_path / "t6.csv"
    args = ["converge", "--kind", "theorem6", "--d", "3", "--ladder", "5,10", "--beta", "1", "--alpha", "0.5"]
    assert main(args + ["--output", str(target)]) == 0
    first = target.read_bytes()
    assert main(args + ["--output", str(target), "--threads", "2"]) == 0
    assert target.read_bytes() == first
    assert capsys.readouterr().out == ""


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "asymknuth", "exact", "--d", "2", "--N", "4"],
                          capture_output=True, text=True, check=True)
    assert "S,14," in proc.stdout
