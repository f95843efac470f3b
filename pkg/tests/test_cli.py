import json
import subprocess
import sys

import pytest

from lensfill import cli
from lensfill.arith import LensSpace
from lensfill.fillings import invariants
from lensfill.golden import Entry, EntryResult


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--json")
    assert code == 0
    return json.loads(out)


def test_cf_and_dual(capsys):
    assert run(capsys, "cf", "84/19")[:2] == (0, "[5,2,4,3]\n")
    assert run(capsys, "dual", "84/19")[:2] == (0, "[2,2,2,4,2,3,2]\n")
    assert run(capsys, "cf", "[5,2,4,3]")[1] == "[5,2,4,3]\n"


@pytest.mark.parametrize("argv", [("cf", "1/1"), ("cf", "6/4"), ("fillings", "12/7", "--rot", "0,0"),
                                  ("fillings", "12/7", "--rot", "x"), ("verify", "--tables", ","),
                                  ("verify", "--tables", "bogus")])
def test_invalid_input_exits_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == ""
    assert err.startswith("lensfill: error:")


def test_p_must_exceed_q_message(capsys):
    assert "p must exceed q" in run(capsys, "cf", "1/1")[2]


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["fillings"])
    assert exc.value.code == 2


@pytest.mark.parametrize("lens,flags,count", [("4/1", ["--ut"], 2), ("12/7", ["--rot", "0,0,0"], 1),
                                              ("29/11", ["--rot", "1,1,-2"], 3), ("4/1", [], 2)])
def test_fillings_counts(capsys, lens, flags, count):
    assert run_json(capsys, "fillings", lens, *flags)["count"] == count


def test_fillings_json_round_trip(capsys):
    doc = run_json(capsys, "fillings", "56/15")
    lens = LensSpace(doc["lens"]["p"], doc["lens"]["q"])
    assert doc["structure"]["universally_tight"]
    assert doc["count"] == len(doc["fillings"]) == 4
    for f in doc["fillings"]:
        assert invariants(tuple(f["seq"]), lens).to_json() == f


def test_json_is_byte_stable(capsys):
    outs = {run(capsys, "fillings", "29/11", "--rot", "1,1,-2", "--json")[1] for _ in range(3)}
    assert len(outs) == 1
    outs = {run(capsys, "cobordism", "6/1", "14/3", "--json")[1] for _ in range(3)}
    assert len(outs) == 1


def test_cobordism_commands(capsys):
    doc = run_json(capsys, "cobordism", "6/1", "14/3")
    assert doc["verdict"] == "OPEN"
    assert [s["move"] for s in doc["path"]] == ["ROLLED_UP_1"]
    doc = run_json(capsys, "cobordism", "14/3", "6/1")
    assert doc["verdict"] == "FORBIDDEN" and doc["path"] is None
    doc = run_json(capsys, "cobordism", "6/1", "3/2", "--rot", "0")
    assert doc["path"][0]["move"] == "TORUS_PLUS_ONE"
    assert doc["path"][-1]["to"] == "[2,2]"


def test_path_command(capsys):
    code, out, _ = run(capsys, "path", "6/1")
    assert code == 0 and out.count("->") >= 1
    doc = run_json(capsys, "path", "6/1", "--rot", "0")
    assert len(doc["signs"]) == len(doc["vertices"]) - 1


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--tables", "3component")
    assert code == 0
    assert "differ from the tabulated source value" in out
    assert "FAIL" not in out


def test_verify_failure_exits_1(capsys, monkeypatch):
    e = Entry("t", 1, 4, 1, True, None, 3)
    monkeypatch.setattr(cli, "verify", lambda tables: [EntryResult(e, False, {"ut": 2}, "observed 2")])
    code, out, _ = run(capsys, "verify")
    assert code == 1 and out.startswith("FAIL t:1 L(4,1) ut -> 3")


def test_sweep(capsys):
    rows = run_json(capsys, "sweep", "--max-p", "10", "--min-count", "2")
    assert {"p": 4, "q": 1} in [{"p": r["p"], "q": r["q"]} for r in rows]
    assert all(r["ut_count"] >= 2 for r in rows)


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "lensfill", "cf", "84/19"], capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == "[5,2,4,3]\n"
