import json
import subprocess
import sys
from dataclasses import replace

from stratakit.cli import run


def ok_json(*argv):
    res = run(list(argv))
    assert res.exit_code == 0, res.stderr
    return json.loads(res.payload)


def test_classify_example():
    data = ok_json("classify", "--k", "2", "--sig", "8,-4")
    assert data["case"] == "1b"
    assert len(data["components"]) == 3
    assert data["components"][0]["coincides_with"] == ["AbOdd"]


def test_classify_verify_makes_parity_unconditional():
    data = ok_json("classify", "--k", "3", "--sig", "2,2,-10", "--verify")
    assert data["components"][0]["parity"] == "odd"
    assert data["components"][0]["conditional"] is False


def test_nk_example():
    assert ok_json("nk", "--k", "3", "--mu", "1,1,-5") == {"k": 3, "mu": "1,1,-5", "nk": 3, "parity": "odd"}


def test_parity_commands():
    assert ok_json("parity", "--k", "3", "--sig", "6,-6", "--d", "2")["parity"] == "odd"
    assert ok_json("parity", "--k", "4", "--sig", "1,-9")["parity"] == "even"
    res = run(["parity", "--k", "3", "--sig", "6,-6"])
    assert res.exit_code == 1 and "--d" in res.stderr


def test_cover_command():
    data = ok_json("cover", "--k", "2", "--sig", "4")
    assert data["cover_genus"] == 3
    assert data["locals"] == [{"m": 4, "r": 2, "ell": 1, "m_hat": 2}]


def test_conjecture_output_and_jobs():
    one = run(["conjecture", "--kmin", "5", "--kmax", "41", "--jobs", "1"])
    four = run(["conjecture", "--kmin", "5", "--kmax", "41", "--jobs", "4"])
    assert one.exit_code == four.exit_code == 0
    assert one.payload == four.payload
    assert one.payload.startswith("k\tn\tn_prime\tN_k_n\tfloor_k1_4\tpass\n5\t2\t3\t1\t1\tpass\n")


def test_conjecture_strict_failure(monkeypatch):
    import stratakit.divisor_count as dc

    real = dc._rows_for_k
    monkeypatch.setattr(
        dc,
        "_rows_for_k",
        lambda k, include_unit=False: [replace(r, passed=False) for r in real(k, include_unit)],
    )
    res = run(["conjecture", "--kmin", "5", "--kmax", "7", "--strict"])
    assert res.exit_code == 2
    assert "counterexample" in res.stderr
    assert res.payload.count("\n") == 4


def test_oplus_command():
    data = ok_json("oplus", "--k", "2", "--base=0,-4", "--ops", "1,4", "--normalize")
    assert data["representatives"] == ["base=0,-4;ops=1,1"]
    assert data["zero_orders"] == [0, 4, 8]
    assert data["final"]["genus"] == 2


def test_merge_command():
    data = ok_json("merge", "--sig", "3,1,-1,-3", "--b", "1")
    assert data["merged"] == "3,-3" and data["bound"] >= data["source_count"]


def test_invalid_input_exit_code():
    res = run(["classify", "--k", "2", "--sig", "3,-8"])
    assert res.exit_code == 1 and res.stderr.startswith("error:")
    assert run(["nosuchcommand"]).exit_code == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "stratakit", "nk", "--k", "3", "--mu", "1,1,-5"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout)["nk"] == 3
