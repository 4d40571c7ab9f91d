import json

import pytest

from quiverlimits.cli import main
from quiverlimits import cli


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_spec(tmp_path, data):
    path = tmp_path / "spec.json"
    path.write_text(json.dumps(data))
    return str(path)


def test_lattice_count(capsys):
    code, out, _ = run(capsys, "lattice", "--a", "1", "--b", "1", "--n", "2", "--format", "text")
    assert code == 0
    assert out.strip() == "5"


def test_lattice_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "lattice", "--a", "1", "--b", "1", "--n", "2")
    assert json.loads(out)["count"] == 5


def test_lattice_weighted(capsys):
    code, out, _ = run(capsys, "lattice", "--a", "1", "--b", "1", "--n", "1", "--weighted", "--format", "text")
    assert code == 0
    assert out.strip() == "t + t^3"


def test_lattice_negative(capsys):
    code, _, err = run(capsys, "lattice", "--a", "-1", "--n", "2")
    assert code == 2
    assert "nonnegative" in err


def test_bps_946(capsys):
    code, out, _ = run(capsys, "bps", "--case", "9_46")
    assert code == 0
    rows = json.loads(out)
    assert [r["a"] for r in rows] == ["-2/1", "-10/1", "-56/1", "-330/1"]
    assert [r["N"] for r in rows] == ["-2/1", "-2/1", "-6/1", "-20/1"]
    assert all(r["integral"] for r in rows)


def test_bps_csv(capsys):
    code, out, _ = run(capsys, "bps", "--case", "8_20", "--format", "csv")
    lines = out.strip().splitlines()
    assert lines[0] == "r,a,N,integral"
    assert lines[1:] == ["1,1/1,1/1,true", "2,5/1,1/1,true", "3,-17/1,-2/1,true", "4,5/1,0/1,true"]


def test_bps_level_zero_rejected(capsys, tmp_path):
    path = write_spec(tmp_path, {"matrix": [[1]], "levels": [0]})
    code, _, _ = run(capsys, "bps", path)
    assert code == 2


def test_limit_both_agree(capsys, tmp_path):
    path = write_spec(tmp_path, {"matrix": [[1, 1], [1, 0]], "levels": [1, 2]})
    code, out, err = run(capsys, "limit", path, "--max-degree", "3")
    assert code == 0
    assert err == ""
    data = json.loads(out)
    assert data["terms"][0] == {"index": [0, 0], "value": "1/1"}
    indices = [t["index"] for t in data["terms"]]
    assert indices == sorted(indices)


def test_limit_text_and_csv(capsys):
    code, out, _ = run(capsys, "limit", "--case", "9_42", "--format", "text", "--max-degree", "4")
    assert code == 0
    assert out.splitlines()[0] == "1: 1"
    code, out, _ = run(capsys, "limit", "--case", "9_42", "--format", "csv", "--max-degree", "2")
    assert out.splitlines()[0] == "l1,value"


def test_limit_level_zero_needs_cap(capsys, tmp_path):
    path = write_spec(tmp_path, {"matrix": [[1, 0], [0, 2]], "levels": [0, 1]})
    code, _, err = run(capsys, "limit", path)
    assert code == 2
    assert "--vertex-cap" in err
    code, _, _ = run(capsys, "limit", path, "--vertex-cap", "2")
    assert code == 0


def test_limit_bad_specs(capsys, tmp_path):
    code, _, _ = run(capsys, "limit", str(tmp_path / "missing.json"))
    assert code == 2
    path = write_spec(tmp_path, {"matrix": [[1, 2], [3, 1]], "levels": [1, 1]})
    code, _, err = run(capsys, "limit", path)
    assert code == 2
    assert "malformed" in err
    code, _, _ = run(capsys, "limit")
    assert code == 2


def test_limit_disagreement_exit(capsys, monkeypatch):
    real = cli.closed_limit

    def broken(spec, D, caps=None):
        y = real(spec, D, caps)
        key = next(l for l in y.window() if sum(l) == 1)
        terms = dict(y.terms)
        terms[key] = terms.get(key, 0) + 1
        return type(y)(terms, y.weights, y.trunc, y.caps)

    monkeypatch.setattr(cli, "closed_limit", broken)
    code, _, err = run(capsys, "limit", "--case", "9_42", "--max-degree", "2")
    assert code == 3
    assert "mismatch" in err


def test_verify_case(capsys):
    code, out, _ = run(capsys, "verify", "--case", "9_46")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] is True


def test_verify_suite_name(capsys):
    code, out, _ = run(capsys, "verify", "--case", "bottom_row", "--format", "text")
    assert code == 0
    assert out.startswith("PASS")


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "--case", "bogus")
    assert code == 2
    assert "UnknownEntry" in err


def test_verify_failure_exit(capsys, monkeypatch):
    from quiverlimits import verify

    monkeypatch.setitem(verify.SUITE, "raney", lambda: [verify.CheckResult("forced", False, "x")])
    code, _, _ = run(capsys, "verify", "--case", "raney")
    assert code == 1


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "bps", "--case", "9_42", "--max-order", "4", "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())[1]["N"] == "-1/1"


def test_deterministic_output(capsys):
    first = run(capsys, "limit", "--case", "9_46", "--max-degree", "3")[1]
    second = run(capsys, "limit", "--case", "9_46", "--max-degree", "3")[1]
    assert first == second


def test_missing_subcommand():
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
