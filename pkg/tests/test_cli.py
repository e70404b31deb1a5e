import json
import os
import subprocess
import sys

import pytest

from jointenum import F, cjwe, poly_from_json, span
from jointenum.cli import run


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def _p(data_dir, name):
    return os.path.join(data_dir, name + ".json")


def test_enum_cjwe_json_and_text(capsys, data_dir):
    C, D = _p(data_dir, "f2_full2"), _p(data_dir, "f2_rep2")
    code, out, _ = _run(capsys, "enum-cjwe", C, D)
    assert code == 0
    A = F(2)
    want = cjwe(span([(1, 0), (0, 1)], A, 2), span([(1, 1)], A, 2))
    assert poly_from_json(json.loads(out)) == want
    code, out, _ = _run(capsys, "enum-cjwe", C, D, "--format", "text")
    assert out.strip() == "x_{00}^2 + 2 x_{00} x_{10} + x_{01}^2 + 2 x_{01} x_{11} + x_{10}^2 + x_{11}^2"


def test_output_is_byte_stable(capsys, data_dir):
    args = ["cycle-index", _p(data_dir, "joint_full_rep"), _p(data_dir, "joint_rep_rep")]
    first = _run(capsys, *args)[1]
    second = _run(capsys, *args)[1]
    assert first == second and first.endswith("\n")
    assert len(json.loads(first)["summands"]) == 32


def test_out_flag(capsys, data_dir, tmp_path):
    target = tmp_path / "w.json"
    code, out, _ = _run(capsys, "enum-cwe", _p(data_dir, "f2_rep2"), "--genus", "2", "--out", str(target))
    assert code == 0 and out == ""
    d = json.loads(target.read_text())
    assert d["l"] == 2 and d["r"] == 1


def test_enum_lr_checks_shape(capsys, data_dir):
    a, b = _p(data_dir, "joint_full_rep"), _p(data_dir, "joint_rep_rep")
    assert _run(capsys, "enum-lr", a, b, "--l", "2", "--r", "2")[0] == 0
    code, _, err = _run(capsys, "enum-lr", a, b, "--l", "3")
    assert code == 2 and "l = 2" in err


def test_tmap_text(capsys, data_dir):
    code, out, _ = _run(capsys, "tmap", _p(data_dir, "z4_12"), "--format", "text")
    assert code == 0
    assert out.strip() == "x_{0}^2 + x_{0} x_{2} + x_{1} x_{2} + x_{2} x_{3}"


def test_tmap_accepts_cycle_index_json(capsys, data_dir, tmp_path):
    ci = tmp_path / "ci.json"
    _run(capsys, "cycle-index", _p(data_dir, "f2_full2"), _p(data_dir, "f2_rep2"), "--out", str(ci))
    code, out, _ = _run(capsys, "tmap", str(ci))
    direct = _run(capsys, "enum-cjwe", _p(data_dir, "f2_full2"), _p(data_dir, "f2_rep2"))[1]
    assert code == 0 and json.loads(out) == json.loads(direct)


def test_macwilliams_report(capsys, data_dir):
    code, out, _ = _run(capsys, "macwilliams", _p(data_dir, "f2_full2"), _p(data_dir, "f2_rep2"),
                        "--pattern", "1,0")
    d = json.loads(out)
    assert code == 0 and d["equal"] is True and d["pattern"] == [1, 0]


def test_average_groups(capsys, data_dir):
    code, out, _ = _run(capsys, "average", _p(data_dir, "group_12"), _p(data_dir, "group_132"))
    d = json.loads(out)
    assert code == 0
    assert d["orbit_size"] == 3 and d["group_order"] == 6
    assert len(d["cycle_index"]["summands"]) == 12


def test_average_codes_reports_enumerator(capsys, data_dir):
    code, out, _ = _run(capsys, "average", _p(data_dir, "f4_hex3"), _p(data_dir, "f4_hex3"))
    d = json.loads(out)
    assert code == 0 and "enumerator" in d


def test_intersect(capsys, data_dir):
    code, out, _ = _run(capsys, "intersect", _p(data_dir, "group_12"), _p(data_dir, "group_132"))
    d = json.loads(out)
    assert code == 0 and d["value"] == "1" and d["reading"] == "abstract"
    code, out, _ = _run(capsys, "intersect", _p(data_dir, "f2_full2"), _p(data_dir, "f2_rep2"))
    d = json.loads(out)
    assert d["reading"] == "code-induced" and d["delta"] == d["group_average"]


@pytest.mark.parametrize("what,files", [
    ("tmap", ["joint_full_rep", "joint_rep_rep"]),
    ("macwilliams", ["f2_full2", "f2_rep2"]),
    ("average", ["f2_full2", "f2_rep2"]),
    ("intersection", ["z4_12", "z4_rep"]),
])
def test_verify_passes(capsys, data_dir, what, files):
    code, _, _ = _run(capsys, "verify", what, *[_p(data_dir, f) for f in files])
    assert code == 0


def test_verify_failure_exits_one(capsys, data_dir, monkeypatch):
    from jointenum import cli
    from jointenum.macwilliams import DualityReport

    real = cli.verify_duality

    def broken(*a, **kw):
        rep = real(*a, **kw)
        return DualityReport(False, rep.lhs, rep.rhs, rep.pattern)

    monkeypatch.setattr(cli, "verify_duality", broken)
    code, out, _ = _run(capsys, "verify", "macwilliams", _p(data_dir, "f2_full2"), _p(data_dir, "f2_rep2"))
    assert code == 1 and json.loads(out)["equal"] is False


@pytest.mark.parametrize("argv,needle", [
    (["enum-cjwe", "f2_full2"], "exactly two"),
    (["cycle-index", "group_12", "f2_full2"], "mix"),
    (["macwilliams", "f2_full2", "f2_rep2", "--pattern", "1,2"], "0 or 1"),
    (["macwilliams", "f2_full2", "f2_rep2", "--pattern", "1"], "entries"),
    (["enum-cjwe", "f2_full2", "z4_12"], "alphabet"),
    (["enum-lr", "joint_full_rep", "joint_rep_rep", "--tuple-cap", "4"], "--tuple-cap"),
])
def test_input_errors_exit_two(capsys, data_dir, argv, needle):
    args = [_p(data_dir, a) if not a.startswith("-") and os.path.exists(_p(data_dir, a)) else a
            for a in argv]
    code, out, err = _run(capsys, *args)
    assert code == 2 and out == ""
    assert needle in err


def test_malformed_files(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"alphabet": "F2", "length": 2, "generators": [[1, 2]]}')
    code, _, err = _run(capsys, "enum-cwe", str(bad))
    assert code == 2 and "outside the alphabet" in err
    bad.write_text("{not json")
    assert _run(capsys, "enum-cwe", str(bad))[0] == 2
    assert _run(capsys, "enum-cwe", str(tmp_path / "missing.json"))[0] == 2


def test_thread_hint_validated(capsys, data_dir, monkeypatch):
    monkeypatch.setenv("JOINTENUM_THREADS", "zero")
    assert _run(capsys, "enum-cwe", _p(data_dir, "f2_full2"))[0] == 2
    monkeypatch.setenv("JOINTENUM_THREADS", "4")
    assert _run(capsys, "enum-cwe", _p(data_dir, "f2_full2"))[0] == 0


def test_module_entry_point(data_dir):
    res = subprocess.run([sys.executable, "-m", "jointenum", "enum-cwe", _p(data_dir, "zero3"),
                          "--format", "text"], capture_output=True, text=True)
    assert res.returncode == 0
    assert res.stdout.strip() == "x_{0}^3"
