import json
import subprocess
import sys

import pytest

from hopfint import integrals as I, linalg
from hopfint.builtins import BUILTIN_NAMES, sweedler
from hopfint.cli import main
from hopfint.hopf import HopfAlgebra, algebra_to_dict
from hopfint.scalars import QQ

FIELDS = ["rational", "prime:7"]


@pytest.fixture
def run(capsys, monkeypatch):
    monkeypatch.setenv("HOPFINT_COLOR", "0")

    def go(*argv):
        code = main(list(argv))
        cap = capsys.readouterr()
        return code, cap.out, cap.err

    return go


@pytest.fixture
def sweedler_file(tmp_path, run):
    code, text, _ = run("builtin", "sweedler")
    assert code == 0
    path = tmp_path / "sweedler.json"
    path.write_text(text, encoding="utf-8")
    return path


def _builtin_args():
    for name in BUILTIN_NAMES:
        for field in FIELDS:
            if name == "taft":
                if field != "rational":
                    yield name, field, ["--n", "3"]
            else:
                yield name, field, []


@pytest.mark.parametrize("name,field,extra", list(_builtin_args()))
def test_builtin_documents_verify(tmp_path, run, name, field, extra):
    code, text, _ = run("builtin", name, "--field", field, *extra)
    assert code == 0
    path = tmp_path / "h.json"
    path.write_text(text, encoding="utf-8")
    code, out, _ = run("verify", "--machine", str(path))
    assert code == 0
    assert json.loads(out)["passed"] is True


def test_builtin_trivial_is_one_dimensional(run):
    code, text, _ = run("builtin", "trivial")
    assert code == 0 and json.loads(text)["dim"] == 1
    code, text, _ = run("builtin", "group:s3")
    assert json.loads(text)["dim"] == 6


def test_verify_human_output(run, sweedler_file):
    code, out, _ = run("verify", str(sweedler_file))
    assert code == 0
    assert out.count("PASS") == 7 and "FAIL" not in out


def test_verify_corrupted_file_names_axiom(tmp_path, run):
    doc = algebra_to_dict(sweedler(QQ))
    doc["s"] = []
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = run("verify", str(path))
    assert code == 1
    assert "axiom failed: A7 antipode" in out


def test_input_errors_exit_2(tmp_path, run):
    assert run("verify", str(tmp_path / "missing.json"))[0] == 2
    assert run("builtin", "taft", "--n", "3", "--field", "prime:5")[0] == 2
    assert run("builtin", "group:a5")[0] == 2
    assert run("frobnicate")[0] == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    code, _, err = run("verify", str(bad))
    assert code == 2 and err.startswith("hopfint:")


def test_integrals_output(run, sweedler_file):
    code, out, _ = run("integrals", str(sweedler_file))
    assert code == 0
    assert "∫_ℓ (left algebra): dim 1, basis {x + gx}" in out
    assert "∫_r (right algebra): dim 1, basis {x - gx}" in out
    assert "∫^r (right dual): dim 1, basis {x*}" in out
    code, out, _ = run("integrals", "--machine", str(sweedler_file))
    doc = json.loads(out)
    assert [sp["dim"] for sp in doc["spaces"]] == [1, 1, 1, 1]
    assert all(p["pairing"] == "1" for p in doc["pairs"])


def test_integrals_on_c2(tmp_path, run):
    _, text, _ = run("builtin", "group:c2")
    path = tmp_path / "c2.json"
    path.write_text(text, encoding="utf-8")
    code, out, _ = run("integrals", str(path))
    assert code == 0
    assert out.count("basis {e + a}") == 2 and out.count("basis {e*}") == 2


def test_kuperberg_matches_library(run, sweedler_file):
    code, out, _ = run("kuperberg", "--machine", str(sweedler_file))
    assert code == 0
    doc = json.loads(out)
    H = sweedler(QQ)
    assert doc["P"] == [[str(x) for x in row] for row in I.kuperberg_P(H)]
    assert doc["trace_P"] == "1"
    code, out, _ = run("kuperberg", str(sweedler_file))
    assert out.splitlines()[-1] == "tr P = 1"


def test_check_paper_pass_and_negative_control(tmp_path, run, sweedler_file):
    code, out, _ = run("check-paper", str(sweedler_file))
    assert code == 0
    assert out.splitlines()[-1].endswith("identities hold")
    H = sweedler(QQ)
    K = HopfAlgebra("perturbed", QQ, H.basis, H.m, H.delta, H.s_inv, H.unit, H.counit)
    path = tmp_path / "perturbed.json"
    path.write_text(json.dumps(algebra_to_dict(K)), encoding="utf-8")
    code, out, _ = run("check-paper", "--machine", str(path))
    assert code == 1
    failed = {r["id"] for r in json.loads(out)["checks"] if r["status"] != "pass"}
    assert "axiom.A7" in failed and "P.trace_one" in failed


def test_eval(tmp_path, run, sweedler_file):
    code, out, _ = run("eval", "--machine", str(sweedler_file), "builtin:P")
    assert code == 0
    P = I.kuperberg_P(sweedler(QQ))
    assert json.loads(out)["tensor"] == [[str(x) for x in row] for row in P]
    idmap = tmp_path / "idmap.diag"
    idmap.write_text("diagram idmap : 1 -> 1 { wire in1 -> out1 }", encoding="utf-8")
    code, out, _ = run("eval", "--machine", str(sweedler_file), str(idmap))
    got = json.loads(out)["tensor"]
    assert got == [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    f = tmp_path / "f.json"
    f.write_text(json.dumps([[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, "1/2", 0], [0, 0, 0, 3]]), encoding="utf-8")
    code, out, _ = run("eval", str(sweedler_file), "builtin:trace_endo", f"f={f}")
    assert code == 0 and out.strip() == "11/2"


def test_eval_errors(tmp_path, run, sweedler_file):
    code, _, err = run("eval", str(sweedler_file), "builtin:trace_endo")
    assert code == 1 and "missing binding" in err
    bad = tmp_path / "bad.diag"
    bad.write_text("diagram b : 1 -> 1\nwire in1 => out1\n", encoding="utf-8")
    code, _, err = run("eval", str(sweedler_file), str(bad))
    assert code == 2 and "line 2" in err
    twice = tmp_path / "twice.diag"
    twice.write_text("diagram b : 2 -> 1\nnode m m\nwire in1 -> m.in1\nwire in2 -> m.in1\nwire m.out -> out1\n")
    code, _, err = run("eval", str(sweedler_file), str(twice))
    assert code == 2 and "port used twice" in err
    assert run("eval", str(sweedler_file), "builtin:nope")[0] == 2


def test_machine_output_is_deterministic(run, sweedler_file):
    for cmd in ("verify", "integrals", "kuperberg", "check-paper"):
        first = run(cmd, "--machine", str(sweedler_file))
        second = run(cmd, "--machine", str(sweedler_file))
        assert first == second
        json.loads(first[1])


def test_color_is_opt_in(run, sweedler_file, monkeypatch):
    assert "\033[" not in run("verify", str(sweedler_file))[1]
    monkeypatch.setenv("HOPFINT_COLOR", "1")
    assert "\033[32mPASS" in run("verify", str(sweedler_file))[1]


def test_module_entry_point(sweedler_file):
    proc = subprocess.run(
        [sys.executable, "-m", "hopfint", "kuperberg", "--machine", str(sweedler_file)],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    P = json.loads(proc.stdout)["P"]
    assert linalg.arrays_equal(QQ.array(P), I.kuperberg_P(sweedler(QQ)))
