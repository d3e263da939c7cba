import io
import json

import pytest

from flatsets import cli


def run(argv):
    out = io.StringIO()
    code = cli.main(argv, stream=out)
    text = out.getvalue()
    return code, (json.loads(text) if text else None)


def _strip_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}


def test_build_8_cycle():
    code, report = run(["build", "8-cycle"])
    assert code == 0 and report["ok"]
    assert report["schema"] == cli.SCHEMA
    assert report["set"]["alpha"] == "1/2" and report["set"]["field"] == "complex"
    assert report["bounds"]["tight_against"] == "flat_complex"
    assert report["tensor"] == {"rank": 4, "cap": 4}
    assert report["tightness"]["verdict"] == "realized"
    assert set(report["verifications"].values()) == {"pass"}
    assert "seconds" in report["timing"]


def test_build_vls():
    code, report = run(["build", "vls"])
    assert code == 0
    assert report["set"]["n"] == 81 and report["set"]["e"] == 3
    assert report["bounds"]["flat_complex"] == 96
    assert report["tight"] is False
    assert report["set"]["angles"] == ["0/1", "1/4"]


def test_build_golay_skips_tensor_without_deep():
    code, report = run(["build", "golay"])
    assert code == 0
    assert report["set"]["n"] == 2048 and report["set"]["alpha"] == "1/9"
    assert report["bounds"]["flat_real"] == 2048 and report["tight"] is True
    assert report["verifications"]["tensor_rank"].startswith("skipped")


def test_build_kasami():
    code, report = run(["build", "kasami", "--kasami", "q=2,variant=i,j=1,m=1"])
    assert code == 0
    assert (report["graph"]["k"], report["graph"]["vertices"]) == (8, 128)
    assert report["tensor"]["rank"] == 64


def test_search_outputs():
    code, report = run(["search", "--max-k", "200", "--field", "complex"])
    assert code == 0 and report["count"] == 1
    assert report["triples"][0]["triple"] == [2, 1, 1]
    code, report = run(["search", "--max-k", "30"])
    triples = [tuple(t["triple"]) for t in report["triples"]]
    assert (8, 1, 7) in triples and (24, 2, 3) in triples


def test_table1():
    code, report = run(["table1"])
    assert code == 0 and report["ok"] and report["mismatches"] == []
    assert report["cells"] == 24
    assert [r["graph"] for r in report["rows"]] == ["4-cube", "folded-8-cube", "golay", "8-cycle"]


def test_table1_fault_injection():
    sabotaged = [dict(row) for row in cli.TABLE1]
    sabotaged[1]["alpha"] = "1/3"
    report = cli.run_table1(sabotaged[:2])
    assert not report["ok"]
    assert report["mismatches"] == ["folded-8-cube.alpha: expected 1/3, got 1/4"]


def test_table1_exit_code_on_mismatch(monkeypatch):
    real_run = cli.run_table1
    bad = ({**cli.TABLE1[3], "space": "R^2"},)
    monkeypatch.setattr(cli, "run_table1", lambda deep=False: real_run(bad, deep))
    code, report = run(["table1"])
    assert code == 1 and not report["ok"]
    assert report["mismatches"] == ["8-cycle.space: expected R^2, got C^2"]


@pytest.mark.parametrize("argv", [
    ["build", "petersen"],
    ["build", "kasami"],
    ["build", "kasami", "--kasami", "q=3,variant=ii"],
    ["build", "kasami", "--kasami", "q=two,variant=ii"],
    ["build", "golay", "--kasami", "q=2,variant=ii"],
    ["search", "--max-k", "1"],
    ["search", "--field", "quaternion"],
    ["export", "8-cycle"],
    [],
])
def test_usage_errors(argv):
    assert run(argv)[0] == 2


def test_help_exits_cleanly(capsys):
    assert cli.main(["--help"], stream=io.StringIO()) == 0


def test_out_directory(tmp_path):
    code, report = run(["build", "4-cube", "--out", str(tmp_path)])
    assert code == 0
    saved = json.loads((tmp_path / "report.json").read_text())
    assert _strip_timing(saved) == _strip_timing(report)
    assert (tmp_path / "vectors.txt").read_text().startswith("n=8 k=4 e=2 alpha=1/4")
    assert (tmp_path / "adjacency.txt").read_text().startswith("2n=16 k=4")


def test_export(tmp_path):
    code, report = run(["export", "vls", "--out", str(tmp_path)])
    assert code == 0 and report["files"] == ["adjacency.txt", "vectors.txt"]
    assert (tmp_path / "vectors.txt").read_text().startswith("n=81 k=6 e=3")


def test_reports_deterministic():
    first = run(["build", "folded-8-cube"])[1]
    second = run(["build", "folded-8-cube"])[1]
    assert json.dumps(_strip_timing(first), sort_keys=True) == \
        json.dumps(_strip_timing(second), sort_keys=True)
