"""CLI behavior: exit codes, report formats, builds, determinism."""

import json
import subprocess
import sys

import pytest

from wreathkit import cli


def run_main(argv, capsys):
    code = cli.main(argv)
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def make_demo(tmp_path, capsys, name, out_name, *extra):
    path = tmp_path / out_name
    code, out, _ = run_main(["demo", name, "-o", str(path), *extra], capsys)
    assert code == 0 and out == f"wrote {path}\n"
    return path


def test_demo_then_check_passes(tmp_path, capsys):
    f = make_demo(tmp_path, capsys, "kplusl", "kp2.json", "--dim-l", "2")
    code, out, err = run_main(["check", str(f), "--law", "ddl"], capsys)
    assert code == 0
    assert out.startswith("law ddl: PASS")
    assert "# elapsed" in err and "# elapsed" not in out
    code, out, _ = run_main(
        ["check", str(f), "--law", "bimonoid", "--format", "json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["schema_version"] == 1
    assert rep["law"] == "bimonoid" and rep["verdict"] == "PASS"
    assert all(c["passed"] and c["residuals"] == [] for c in rep["checks"])


def test_flipped_twist_fails_at_one_compat_identity(tmp_path, capsys):
    f = make_demo(tmp_path, capsys, "kplusl", "kp1.json", "--dim-l", "1")
    doc = json.loads(f.read_text())
    doc["roles"]["bimonoid"]["map"] = "tau"
    f.write_text(json.dumps(doc))
    code, out, _ = run_main(["check", str(f), "--law", "bimonoid"], capsys)
    assert code == 1
    assert out.startswith("law bimonoid: FAIL")
    assert "FAIL (iii)(b)" in out
    code, out, _ = run_main(
        ["check", str(f), "--law", "bimonoid", "--format", "json"], capsys)
    assert code == 1
    by_name = {c["name"]: c for c in json.loads(out)["checks"]}
    assert not by_name["(iii)(b)"]["passed"]
    assert by_name["(iii)(a)"]["passed"]
    assert by_name["(iii)(c)"]["passed"]
    assert by_name["(iii)(d)"]["passed"]
    assert by_name["(iii)(b)"]["residuals"][0] == {
        "row": 3, "col": 3, "lhs": "2", "rhs": "0", "delta": "2"}


def test_malformed_input_exits_two(tmp_path, capsys):
    code, _, err = run_main(["check", str(tmp_path / "absent.json"),
                             "--law", "ddl"], capsys)
    assert code == 2 and err.startswith("error:")
    f = make_demo(tmp_path, capsys, "kplusl", "kp.json")
    code, _, err = run_main(["check", str(f), "--law", "wreath"], capsys)
    assert code == 2 and err.startswith("error:")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_main(["check", str(bad), "--law", "ddl"], capsys)
    assert code == 2 and err.startswith("error:")
    code, _, err = run_main(["demo", "no-such-demo", "-o",
                             str(tmp_path / "x.json")], capsys)
    assert code == 2 and err.startswith("error:")
    with pytest.raises(SystemExit) as exc:
        cli.main(["check", str(f), "--law", "no-such-law"])
    assert exc.value.code == 2


def test_mathematical_failure_exits_one(tmp_path, capsys):
    f = make_demo(tmp_path, capsys, "kplusl", "kp.json")
    doc = json.loads(f.read_text())
    doc["morphisms"]["hbar"]["matrix"][0][0] = "2"
    f.write_text(json.dumps(doc))
    code, out, _ = run_main(["check", str(f), "--law", "ddl"], capsys)
    assert code == 1 and out.startswith("law ddl: FAIL")
    out_path = tmp_path / "induced.json"
    code, _, err = run_main(["build", str(f), "--construct", "induced-monoid",
                             "-o", str(out_path)], capsys)
    assert code == 1 and err.startswith("failed:")
    assert not out_path.exists()


def test_builds_re_check_and_universal_maps_are_identities(tmp_path, capsys):
    pair = make_demo(tmp_path, capsys, "tensor-flip-pair", "pair.json")
    wr = tmp_path / "wr.json"
    code, _, _ = run_main(["build", str(pair), "--construct",
                           "wreath-product", "-o", str(wr)], capsys)
    assert code == 0
    assert run_main(["check", str(wr), "--law", "monoid"], capsys)[0] == 0
    cw = tmp_path / "cw.json"
    code, _, _ = run_main(["build", str(pair), "--construct",
                           "cowreath-product", "-o", str(cw)], capsys)
    assert code == 0
    assert run_main(["check", str(cw), "--law", "comonoid"], capsys)[0] == 0
    ident4 = [["1" if i == j else "0" for j in range(4)] for i in range(4)]
    uw = tmp_path / "uw.json"
    assert run_main(["build", str(pair), "--construct", "universal-wreath",
                     "-o", str(uw)], capsys)[0] == 0
    assert json.loads(uw.read_text())["morphisms"]["phi"]["matrix"] == ident4
    uc = tmp_path / "uc.json"
    assert run_main(["build", str(pair), "--construct", "universal-cowreath",
                     "-o", str(uc)], capsys)[0] == 0
    assert json.loads(uc.read_text())["morphisms"]["gamma"]["matrix"] == ident4


def test_report_runs_every_bound_law(tmp_path, capsys):
    pair = make_demo(tmp_path, capsys, "tensor-flip-pair", "pair.json")
    code, out, _ = run_main(["report", str(pair)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["verdict"] == "PASS"
    assert set(rep["laws"]) == {"monoid", "comonoid", "module", "comodule",
                                "em:ra", "mdl", "cdl", "wreath", "cowreath"}
    code, out, _ = run_main(["report", str(pair), "--format", "text"], capsys)
    assert code == 0 and out.endswith("overall: PASS\n")


def test_bimodule_backend_files_check_over_their_ring(tmp_path, capsys):
    f = make_demo(tmp_path, capsys, "trivial-ring-qxq", "ring.json")
    assert run_main(["check", str(f), "--law", "coring-compat"],
                    capsys)[0] == 0
    code, out, _ = run_main(["report", str(f)], capsys)
    assert code == 0
    assert set(json.loads(out)["laws"]) == {"coring-compat"}
    code, _, err = run_main(["check", str(f), "--law", "monoid"], capsys)
    assert code == 2 and err.startswith("error:")


def test_module_entry_point_is_deterministic(tmp_path):
    f = tmp_path / "kp.json"
    r = subprocess.run([sys.executable, "-m", "wreathkit", "demo", "kplusl",
                        "-o", str(f)], capture_output=True, text=True)
    assert r.returncode == 0
    cmd = [sys.executable, "-m", "wreathkit", "check", str(f),
           "--law", "bimonoid", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    assert b"# elapsed" in first.stderr
