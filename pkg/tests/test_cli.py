import json

import pytest

from gl3hecke.cli import RunConfig, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_partition(capsys):
    code, out, _ = run(capsys, "partition", "--window", "5")
    rep = json.loads(out)
    assert code == 0 and rep["points"] == 121 and rep["classes"] == 6 and rep["violations"] == []
    code, out, _ = run(capsys, "partition", "--window", "3", "--rank", "4")
    assert json.loads(out)["classes"] == 24
    code, out, _ = run(capsys, "partition", "--window", "0", "--format", "csv")
    assert "Id,123,1" in out


def test_act(capsys):
    code, out, _ = run(capsys, "act", "Tt(−1,0)", "Id:-2,-1", "--case", "regular", "--format", "text")
    assert code == 0 and "result: 1*f[123;-3,-1]" in out
    code, out, _ = run(capsys, "act", "", "Id:-2,-1", "--format", "text")
    assert "result: 1*f[123;-2,-1]" in out
    code, out, _ = run(capsys, "act", "(Tγ Tω₁)^2", "(0,0)")
    assert json.loads(out)["result"] == "1*f[123;-1,0]"
    code, _, err = run(capsys, "act", "Tt10", "Id:0,0")
    assert code == 2 and "not generators" in err


@pytest.mark.parametrize("case,n", [("iwahori", 2), ("semiregular", 3), ("regular", 9)])
def test_relations(capsys, case, n):
    code, out, _ = run(capsys, "relations", "--case", case, "--window", "4")
    rep = json.loads(out)
    assert code == 0 and rep["passed"] == rep["total"] == n


def test_theorem(capsys):
    code, out, _ = run(capsys, "theorem", "--case", "semiregular", "--window", "4")
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(capsys, "theorem", "--a=-2,-1", "--a-star=-2,-1")
    assert json.loads(out)["rows"][0]["word"] == "1"
    code, _, err = run(capsys, "theorem", "--a=-2,-1", "--a-star=-1,-1")
    assert code == 2 and "not proper" in err


def test_corollary(capsys):
    dims = []
    for b in (6, 8):
        code, out, _ = run(capsys, "corollary", "--window", str(b), "--case", "regular")
        row = json.loads(out)["rows"][0]
        assert code == 0 and row["dim_cap"] == 0 and row["schema"] == "gl3hecke.corollary/1"
        dims.append(row["dim_M2"])
    assert dims[0] < dims[1]
    code, _, err = run(capsys, "corollary", "--a=-3,-1")
    assert code == 2


def test_oracle_files(capsys, tmp_path):
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, out, _ = run(capsys, "oracle", "--claims", str(empty))
    assert code == 0 and json.loads(out)["rows"] == []
    bad = tmp_path / "bad.txt"
    bad.write_text("regular_t1; Id; -2,-1; q=2,s=1; 0,-2\n")
    code, out, _ = run(capsys, "oracle", "--claims", str(bad))
    assert code == 1 and not json.loads(out)["ok"]
    code, out, _ = run(capsys, "oracle")
    assert code == 0 and json.loads(out)["claims"] >= 20


def test_oracle_sweep_precision_guard(capsys):
    code, _, err = run(capsys, "oracle", "--sweep", "--window", "4", "--precision", "8")
    assert code == 2 and "precision" in err


def test_out_file_and_determinism(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["relations", "--case", "iwahori", "--window", "3", "--c", "-1", "--out", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_run_config_validation():
    with pytest.raises(ValueError):
        RunConfig(p=4)
    with pytest.raises(ValueError):
        RunConfig(q=6)
    with pytest.raises(ValueError):
        RunConfig(case="bogus")
