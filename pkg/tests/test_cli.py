import json
import subprocess
import sys

import pytest

from qhkit.cli import main
from qhkit.report import COMMANDS, STAGES, run_command

from conftest import FIXTURES, fixture_path

EXPECTED_ALL = {"exampleB_L1": 0, "exampleB_L3_F13": 0, "ex412_L1": 0, "B4_identity": 0,
                "exampleB_L2": 1, "ex412_L2": 1, "B4_nonsym": 1, "bad_swapped": 1,
                "bad_L1_not_B": 1, "bad_mislabeled_min": 1, "bad_broken_b": 1,
                "dual_numbers": 1, "bad_not_prime": 2}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def report(cmd, name, **kw):
    return run_command(cmd, fixture_path(name).read_text(), **kw)


@pytest.mark.parametrize("name,code", sorted(EXPECTED_ALL.items()))
def test_all_exit_codes(capsys, name, code):
    got, out = run(capsys, "all", fixture_path(name), "--emit", "json")
    assert got == code
    assert json.loads(out)["status"] == {0: "pass", 1: "fail", 2: "error"}[code]


@pytest.mark.parametrize("cmd,code", [("check-ma", 0), ("endo", 0), ("check-1qh", 0),
                                      ("bgg", 0), ("ringel", 0)])
def test_single_commands_pass(capsys, cmd, code):
    assert run(capsys, cmd, fixture_path("exampleB_L1"))[0] == code


def test_single_command_failures():
    assert report("bgg", "B4_nonsym")[1] == 1
    r, code = report("ringel", "ex412_L2")
    assert code == 1 and r["ringel"]["failed_at"] == "yhat"
    assert r["ringel"]["socle_witness_dims"] == {"5": 2}
    assert report("check-ma", "bad_swapped")[1] == 1
    assert report("check-1qh", "bad_swapped")[1] == 1


@pytest.mark.parametrize("name", ["bad_swapped", "bad_L1_not_B", "bad_mislabeled_min",
                                  "bad_broken_b"])
def test_all_skips_after_failed_check(name):
    r, code = report("all", name)
    assert code == 1 and r["check_ma"]["status"] == "fail"
    assert r["check_ma"]["witnesses"]
    for st in STAGES[1:]:
        assert r[st]["status"] == "skipped"


def test_json_and_text_agree(capsys):
    for name in ("exampleB_L1", "ex412_L2"):
        _, js = run(capsys, "all", fixture_path(name), "--emit", "json")
        _, tx = run(capsys, "all", fixture_path(name), "--emit", "text")
        d = json.loads(js)
        assert f"status: {d['status']}" in tx.splitlines()
        for st in STAGES:
            assert d[st]["status"] in tx


def test_reports_are_deterministic():
    path = fixture_path("exampleB_L2")
    cmd = [sys.executable, "-m", "qhkit", "all", str(path), "--emit", "json", "--seed", "7"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == b.returncode == 1
    assert a.stdout == b.stdout
    prov = json.loads(a.stdout)["provenance"]
    assert prov["options"]["seed"] == 7 and prov["field"] == "Q"
    assert len(prov["input_sha256"]) == 64


def test_error_report_has_location(capsys):
    code, out = run(capsys, "check-ma", fixture_path("bad_not_prime"), "--emit", "json")
    err = json.loads(out)["error"]
    assert code == 2 and "not prime" in err["message"]
    assert (err["line"], err["column"]) == (4, 10)


def test_expression_error_location(tmp_path, capsys):
    text = fixture_path("exampleB_L1").read_text().replace('"x^3 - y^3"', '"x^3 - y^^3"')
    p = tmp_path / "broken.json"
    p.write_text(text)
    code, out = run(capsys, "check-ma", p, "--emit", "json")
    err = json.loads(out)["error"]
    assert code == 2 and err["line"] is not None
    assert text.splitlines()[err["line"] - 1][err["column"] - 1] == "^"


def test_usage_errors(capsys, tmp_path):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate", str(fixture_path("exampleB_L1"))])
    assert exc.value.code == 2
    assert main(["all", str(tmp_path / "missing.json")]) == 2
    assert main(["all", str(fixture_path("exampleB_L1")), "--degree-cap", "0"]) == 2
    capsys.readouterr()


def test_degree_cap_too_small(capsys):
    code, out = run(capsys, "endo", fixture_path("exampleB_L1"), "--degree-cap", "2",
                    "--emit", "json")
    d = json.loads(out)
    assert code == 2 and d["error"]["kind"] == "CapExceeded"


def test_endo_section_contents():
    r, code = report("endo", "exampleB_L1")
    e = r["endo"]
    assert code == 0 and e["dim"] == 63 and len(e["arrows"]) == 12
    assert e["reading"] == "traversal" and e["block_dims_match"]
    assert all(isinstance(t, str) for t in e["relations"])


def test_every_command_is_known():
    assert set(COMMANDS) == {"check-ma", "endo", "check-1qh", "bgg", "ringel", "all"}


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "qhkit", "--help"], capture_output=True,
                         text=True, check=True).stdout
    assert "--degree-cap" in out
