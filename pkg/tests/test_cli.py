import copy
import json
import subprocess
import sys
from fractions import Fraction
from importlib import resources

from uocodes.cli import EXIT_ERROR, EXIT_NOT_CERTIFIED, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def hamming_file(tmp_path):
    from uocodes.codes import construct

    return write(tmp_path, "hamming74.json", construct("hamming", q=2, r=3).to_json())


def test_certify_catalog(capsys):
    code, out = run(capsys, "certify", "--catalog", "golay24")
    assert code == EXIT_OK and out["certified"]
    assert out["criterion"]["criterion"] == "design_spread"
    assert len(out["certificates"]) == 24
    code, out = run(capsys, "certify", "--catalog", "hamming", "--q", "2", "--r", "3")
    assert code == EXIT_OK and out["criterion"]["criterion"] == "duality+one_design"


def test_certify_two_point_file_and_round_trip(capsys, tmp_path):
    pair = write(tmp_path, "two_points.json", {"q": 2, "n": 2, "words": [[0, 0], [0, 1]]})
    code, out = run(capsys, "certify", "--file", pair)
    assert code == EXIT_NOT_CERTIFIED and not out["certified"]
    assert out["first_failure"]["potential"] == "fundamental:1"

    code, out = run(capsys, "certify", "--catalog", "hadamard", "--order", "8")
    assert code == EXIT_OK
    report = write(tmp_path, "report.json", out)
    code, ver = run(capsys, "certify", "--verify-only", "--file", report)
    assert code == EXIT_OK and all(v["verified"] for v in ver["verifications"])

    # a tampered certificate no longer verifies
    bad = copy.deepcopy(out)
    bad["certificates"][0]["c"][1] = "1/2" if bad["certificates"][0]["c"][1] != "1/2" else "1/3"
    code, ver = run(capsys, "certify", "--verify-only", "--file", write(tmp_path, "bad.json", bad))
    assert code == EXIT_NOT_CERTIFIED and not ver["certified"]


def test_verify_only_needs_no_programs(capsys, tmp_path, monkeypatch):
    code, out = run(capsys, "certify", "--catalog", "golay12")
    report = write(tmp_path, "g12.json", out)
    import uocodes.lp.delsarte as d

    def boom(*a, **k):
        raise AssertionError("a program was solved")

    monkeypatch.setattr(d.DelsarteSolver, "minimize", boom)
    code, ver = run(capsys, "certify", "--verify-only", "--file", report)
    assert code == EXIT_OK and ver["certified"]


def test_bad_input_exits_2(capsys, tmp_path):
    assert run(capsys, "certify", "--catalog", "nonexistent")[0] == EXIT_ERROR
    assert run(capsys, "certify")[0] == EXIT_ERROR
    assert run(capsys, "search", "2", "6", "3")[0] == EXIT_ERROR
    assert run(capsys, "lp", "2", "3", "4", "bogus:1")[0] == EXIT_ERROR
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run(capsys, "dual", str(junk))[0] == EXIT_ERROR
    assert main(["frobnicate"]) == EXIT_ERROR
    capsys.readouterr()


def test_search_energy_dual_lp(capsys, tmp_path):
    code, out = run(capsys, "search", "2", "3", "3")
    assert code == EXIT_OK and out["verdict"] == "1 class(es)"
    ham = hamming_file(tmp_path)
    code, out = run(capsys, "energy", ham, "fundamental:0")
    assert Fraction(out["energy"]) == 15
    code, out = run(capsys, "dual", ham)
    assert [Fraction(v) for v in out["dual"]["A"]] == [1, 0, 0, 0, 7, 0, 0, 0]
    code, out = run(capsys, "lp", "2", "2", "3", "fundamental:1")
    assert Fraction(out["minimum"]) == 1 and out["certificate"] is not None
    code, out = run(capsys, "lp", "2", "2", "3", "fundamental:1", "--strengthened")
    assert Fraction(out["minimum"]) == Fraction(4, 3) and out["certificate"] is None


def test_search_exceptional_size(capsys):
    code, out = run(capsys, "search", "2", "5", "9")
    assert code == EXIT_OK and out["verdict"] == "none"


def test_remove_check(capsys):
    code, out = run(capsys, "remove-check", "hamming", "--q", "2", "--r", "3")
    assert code == EXIT_OK and out["verdict"]
    code, out = run(capsys, "remove-check", "ovoid")
    assert code == EXIT_ERROR


def test_table_family_and_corrupted_registry(capsys, tmp_path):
    code, out = run(capsys, "table", "--family", "hadamard")
    assert code == EXIT_OK and out["failed_rows"] == []
    data = json.loads(resources.files("uocodes").joinpath("data/registry.json").read_text())
    rows = [copy.deepcopy(r) for r in data["rows"] if r["key"] in ("hadamard", "simplex")]
    next(r for r in rows if r["key"] == "hadamard")["instances"][1]["support"] = [4]
    reg = write(tmp_path, "corrupt.json", {"rows": rows})
    code, out = run(capsys, "table", "--registry", reg)
    assert code == EXIT_NOT_CERTIFIED and out["failed_rows"] == ["hadamard"]


def test_reports_are_deterministic(capsys):
    a = run(capsys, "certify", "--catalog", "golay11")
    b = run(capsys, "certify", "--catalog", "golay11")
    assert a == b and "timings" not in a[1]
    assert "timings" in run(capsys, "--timings", "search", "2", "2", "3")[1]


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "uocodes", "search", "2", "2", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"] == "1 class(es)"
