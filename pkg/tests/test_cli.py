"""Command line behavior: verbs, exit codes, and JSON reports."""

import json

from octaforms.cli import run


def _no_floats(obj):
    if isinstance(obj, float):
        return False
    if isinstance(obj, dict):
        return all(_no_floats(k) and _no_floats(v) for k, v in obj.items())
    if isinstance(obj, list):
        return all(_no_floats(x) for x in obj)
    return True


def test_usage_errors():
    assert run(["frobnicate"]) == 2
    assert run(["psi", "--coeffs", "2,2,3"]) == 2  # missing --n
    assert run(["verify", "nonsense"]) == 2
    assert run(["psi", "--coeffs", "3,2", "--n", "2"]) == 2  # unsorted coefficients


def test_sieve_and_psi(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert run(["sieve", "--coeffs", "2,3,4,6", "--bound", "200", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert "missing" in text and "18" in text
    report = json.loads(out.read_text())
    assert report["schema"] == 1
    assert report["results"]["missing_head"] == [18]
    assert _no_floats(report)

    assert run(["psi", "--coeffs", "2,2,3", "--n", "2", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["results"]["psi"] == 6


def test_check_exit_codes(tmp_path):
    out = tmp_path / "r.json"
    assert run(["check", "--coeffs", "2,3,4,5", "--n", "2", "--bound", "50000",
                "--out", str(out)]) == 0
    assert json.loads(out.read_text())["results"]["verdict"] == "tight"
    assert run(["check", "--coeffs", "2,2,3", "--n", "2", "--bound", "50000",
                "--out", str(out)]) == 1
    report = json.loads(out.read_text())
    assert report["status"] == "fail"
    assert report["results"] == {"verdict": "misses_criterion", "value": 6,
                                 "criterion": [2, 3, 4, 6, 8, 9, 11, 12, 14, 18]}


def test_escalate_report(tmp_path, capsys):
    out = tmp_path / "t2.json"
    assert run(["escalate", "--n", "2", "--bound", "50000", "--out", str(out)]) == 0
    report = json.loads(out.read_text())
    assert _no_floats(report)
    depths = report["results"]["trace"]["depths"]
    assert [len(d["E"]) for d in depths] == [1, 1, 2, 9, 52, 30]
    assert report["results"]["new_count"] == 57
    assert report["bound_used"] == 50000
    assert isinstance(report["elapsed_ms"], int)


def test_criterion_verb(capsys):
    assert run(["criterion", "--n", "4", "--bound", "50000"]) == 0
    assert "[4, 5, 6, 7, 8, 23, 28]" in capsys.readouterr().out


def test_verify_round_trip(tmp_path, capsys):
    out = tmp_path / "t2.json"
    assert run(["escalate", "--n", "2", "--bound", "50000", "--out", str(out)]) == 0
    assert run(["verify", "t2", "--trace", str(out)]) == 0
    assert "set-equal with escalation: True" in capsys.readouterr().out
    # a trace for the wrong floor is refused
    assert run(["verify", "t3", "--trace", str(out)]) == 2


def test_verify_z_table(tmp_path, capsys):
    out = tmp_path / "z.json"
    assert run(["verify", "z-table", "--bound", "5000", "--out", str(out)]) == 0
    text = capsys.readouterr().out
    assert text.count("ok (") == 26
    report = json.loads(out.read_text())
    assert report["status"] == "pass"
    assert report["results"]["z-table"]["rows"] == 26


def test_verify_detects_broken_data(tmp_path, capsys):
    # corrupt one Z-set and expect a verification failure
    from octaforms.tables import bundled_table_path, TABLE_FILES

    data_dir = tmp_path / "data"
    data_dir.mkdir()
    for t, name in TABLE_FILES.items():
        data_dir.joinpath(name).write_text(bundled_table_path(t).read_text())
    broken = data_dir / TABLE_FILES[1]
    broken.write_text(broken.read_text().replace("expect=Z:8,11", "expect=Z:8,12"))
    assert run(["verify", "z-table", "--bound", "5000", "--data-dir", str(data_dir)]) == 1


def test_verify_detects_broken_fixtures(tmp_path, capsys):
    # swap a recorded transform for the scaled identity: condition (i) fails
    from octaforms.fixtures import bundled_fixture_path

    path = tmp_path / "fx.txt"
    path.write_text(
        bundled_fixture_path().read_text().replace(
            "T = 3 0 -18 / 0 9 0 / 4 0 3", "T = 9 0 0 / 0 9 0 / 0 0 9"
        )
    )
    assert run(["verify", "lemmas", "--fixtures", str(path)]) == 1
    assert "FAIL stable-vector 234-n1-a3" in capsys.readouterr().out


def test_missing_data_paths_are_usage_errors(tmp_path):
    assert run(["verify", "z-table", "--data-dir", str(tmp_path / "nope")]) == 2
    assert run(["verify", "lemmas", "--fixtures", str(tmp_path / "nope.txt")]) == 2


def test_jobs_flag_equivalence(capsys, tmp_path):
    out1, out2 = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["escalate", "--n", "3", "--bound", "20000", "--out", str(out1)]) == 0
    assert run(["escalate", "--n", "3", "--bound", "20000", "--jobs", "3",
                "--out", str(out2)]) == 0
    a, b = json.loads(out1.read_text()), json.loads(out2.read_text())
    assert a["results"]["trace"] == b["results"]["trace"]
