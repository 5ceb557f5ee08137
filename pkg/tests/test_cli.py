import json

import pytest

from shephardlab import checks, cli, reports


def run_cli(capsys, argv):
    code = cli.main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list(capsys):
    code, out, _ = run_cli(capsys, ["list"])
    assert code == 0
    assert any(line.split()[0] == "3[3]3" and "24" in line.split()
               and "4,6" in line.split() for line in out.splitlines())


def test_list_family_filter(capsys):
    code, out, _ = run_cli(capsys, ["list", "--family", "coxeter"])
    assert code == 0
    names = [line.split()[0] for line in out.splitlines()]
    assert "B2" in names and "H3" in names
    assert all(not n.startswith("G(") and "[" not in n for n in names)


def test_list_checks(capsys):
    code, out, _ = run_cli(capsys, ["--list-checks"])
    assert code == 0
    assert tuple(out.split()) == checks.CHECK_IDS


@pytest.mark.parametrize("check_id", checks.CHECK_IDS)
def test_each_check_runs_individually(capsys, check_id):
    code, out, _ = run_cli(capsys, ["verify", "C3", "--check", check_id])
    assert code == 0
    assert check_id in out


def test_verify_exit_zero_on_pass(capsys):
    code, out, _ = run_cli(capsys, ["verify", "C3", "--check", "all"])
    assert code == 0
    assert "overall: pass" in out


def test_verify_unknown_group(capsys):
    code, _, err = run_cli(capsys, ["verify", "5[3]5"])
    assert code == 2 and "unknown group" in err


def test_verify_symbol_parse_error(capsys):
    code, _, err = run_cli(capsys, ["verify", "3[2]3"])
    assert code == 2 and "cannot parse" in err


def test_verify_unknown_check(capsys):
    code, _, err = run_cli(capsys, ["verify", "B2", "--check", "bogus"])
    assert code == 2 and "unknown check" in err


def test_verify_stretch_requires_flag(capsys):
    code, _, err = run_cli(capsys, ["verify", "3[3]3[3]3"])
    assert code == 2 and "--stretch" in err


def test_check_prefix_selector(capsys):
    code, out, _ = run_cli(capsys, ["verify", "B2", "--check", "thm1.1"])
    assert code == 0
    assert "thm1.1-graded" in out and "thm1.1-ungraded" in out
    assert "lemma2.3" not in out


def test_json_round_trip_and_determinism():
    report1 = checks.run_checks("C3", checks.CHECK_IDS)
    report2 = checks.run_checks("C3", checks.CHECK_IDS)
    text1, text2 = reports.render_json(report1), reports.render_json(report2)
    assert text1 == text2
    assert reports.report_from_json(text1) == report1


def test_json_schema_fields(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, _, _ = run_cli(capsys, ["verify", "B2", "--check", "cor3.2",
                                  "--format", "json", "--out",
                                  str(out_path)])
    assert code == 0
    doc = json.loads(out_path.read_text())
    assert doc["schema"] == 1
    assert doc["group"] == "B2" and doc["field_order"] == 4
    (check,) = doc["checks"]
    assert check["id"] == "cor3.2" and check["status"] == "pass"
    assert check["millis"] == 0


def test_failing_check_sets_exit_code(capsys, monkeypatch):
    monkeypatch.setitem(checks.RUNNERS, "qh-eq-j",
                        lambda ctx, seed: ("fail", {"note": "synthetic"}))
    code, out, _ = run_cli(capsys, ["verify", "C3", "--check", "qh-eq-j"])
    assert code == 1
    assert "overall: fail" in out


def test_erroring_check_is_reported(capsys, monkeypatch):
    def boom(ctx, seed):
        raise RuntimeError("synthetic explosion")

    monkeypatch.setitem(checks.RUNNERS, "cor3.2", boom)
    code, out, _ = run_cli(capsys, ["verify", "C3", "--check", "cor3.2"])
    assert code == 1
    assert "error" in out and "synthetic explosion" in out


def test_export_complex(capsys, tmp_path):
    out_path = tmp_path / "complex.txt"
    code, _, _ = run_cli(capsys, ["export-complex", "3[3]3", "--out",
                                  str(out_path)])
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "complex-export 1"
    assert lines[1] == "group 3[3]3"
    assert sum(1 for l in lines if l.startswith("vertex ")) == 16
    assert sum(1 for l in lines if l.startswith("cell 1 ")) == 24
    assert sum(1 for l in lines if l.startswith("boundary 1 ")) == 24
    # every edge has two boundary vertices with alternating signs
    for line in lines:
        if line.startswith("boundary 1 "):
            entries = line.split()[3:]
            signs = sorted(int(e.split(":")[1]) for e in entries)
            assert signs == [-1, 1]


def test_report_sanitize_rejects_unknown_types():
    with pytest.raises(TypeError):
        reports.sanitize(object())
