import json

import pytest

from sdtensor.cli import main


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classes_json(capsys):
    code, out, _ = run_cli(capsys, "classes", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["class_count"] == 7
    assert payload["group_order"] == 16
    sizes = [c["size"] for c in payload["classes"]]
    assert sorted(sizes) == [1, 1, 2, 2, 2, 4, 4]


def test_classes_pretty(capsys):
    code, out, _ = run_cli(capsys, "classes", "--n", "3", "--format", "pretty")
    assert code == 0
    assert "12 conjugacy classes" in out


def test_json_output_is_deterministic(capsys):
    _, first, _ = run_cli(capsys, "table", "--n", "3")
    _, second, _ = run_cli(capsys, "table", "--n", "3")
    assert first == second
    _, threaded, _ = run_cli(capsys, "basis", "--n", "2", "--m", "2", "--char", "zeta:2", "--jobs", "4")
    _, sequential, _ = run_cli(capsys, "basis", "--n", "2", "--m", "2", "--char", "zeta:2", "--jobs", "1")
    assert threaded == sequential


def test_table_csv(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "character,1,a,a^2,a^4,a^5,b,ba"
    assert len(lines) == 8  # header + 7 characters
    assert lines[1].startswith("chi:0,")
    # exact coordinates and a float rendering share each cell
    assert "(1;0;0;0) +1.000000+0.000000i" in lines[1]


def test_table_json_entries(capsys):
    code, out, _ = run_cli(capsys, "table", "--n", "2")
    payload = json.loads(out)
    assert [row["character"] for row in payload["rows"]] == [
        "chi:0", "chi:1", "chi:2", "chi:3", "zeta:2", "psi:1", "psi:5",
    ]
    chi0 = payload["rows"][0]["values"]
    assert all(v["exact"]["coeffs"] == [1, 0, 0, 0] for v in chi0)


def test_dims_m1(capsys):
    code, out, _ = run_cli(capsys, "dims", "--n", "2", "--m", "1")
    assert code == 0
    payload = json.loads(out)
    by_char = {d["character"]: d["general"] for d in payload["dims"]}
    assert by_char == {
        "chi:0": 1, "chi:1": 0, "chi:2": 0, "chi:3": 0,
        "zeta:2": 0, "psi:1": 0, "psi:5": 0,
    }
    assert payload["total_identity_holds"] is True


def test_dims_flags_closed_form_defects(capsys):
    _, out, _ = run_cli(capsys, "dims", "--n", "2", "--m", "2")
    payload = json.loads(out)
    psi1 = next(d for d in payload["dims"] if d["character"] == "psi:1")
    assert psi1["general"] == 60 and psi1["closed_form"] == 30
    assert psi1["agree"] is False and "note" in psi1


def test_orbits_listing(capsys):
    code, out, _ = run_cli(capsys, "orbits", "--n", "2", "--m", "2", "--char", "zeta:2")
    assert code == 0
    payload = json.loads(out)
    assert payload["orbit_count"] == 27
    marked = next(
        o for o in payload["orbits"] if o["representative"] == [1, 2, 2, 2, 2, 2, 2, 2]
    )
    assert marked["orbit_size"] == 8
    assert marked["stabilizer"] == ["1", "ba^2"]
    assert marked["in_delta_bar"] is True


def test_basis_decision_agreeing_case(capsys):
    code, out, _ = run_cli(capsys, "basis", "--n", "3", "--m", "2", "--char", "zeta:2")
    assert code == 0
    payload = json.loads(out)
    assert payload["predicted"] is False
    assert payload["exhaustive"] is False
    assert payload["agree"] is True
    assert any("failure" in o for o in payload["orbits"])


def test_basis_decision_disagreeing_case(capsys):
    # the psi prediction is falsified by the exhaustive search at even n;
    # the report carries both verdicts side by side
    code, out, _ = run_cli(capsys, "basis", "--n", "2", "--m", "2", "--char", "psi:1")
    assert code == 0
    payload = json.loads(out)
    assert payload["predicted"] is False
    assert payload["exhaustive"] is True
    assert payload["agree"] is False
    assert all("witness" in o for o in payload["orbits"])


def test_budget_refusal_exit_code(capsys):
    code, _, err = run_cli(capsys, "orbits", "--n", "3", "--m", "3", "--budget", "100")
    assert code == 3
    assert "refused" in err


def test_budget_env_var(capsys, monkeypatch):
    monkeypatch.setenv("SDTENSOR_BUDGET", "10")
    code, _, err = run_cli(capsys, "orbits", "--n", "2", "--m", "2")
    assert code == 3
    # an explicit flag overrides the environment default
    code, out, _ = run_cli(capsys, "orbits", "--n", "2", "--m", "2", "--budget", "300")
    assert code == 0


def test_bad_character_spec_exit_code(capsys):
    code, _, err = run_cli(capsys, "basis", "--n", "2", "--m", "2", "--char", "zeta:3")
    assert code == 2
    assert "error" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["classes"])  # missing --n
    assert exc.value.code == 2


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(capsys, "classes", "--n", "2", "--output", str(target))
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["class_count"] == 7


def test_verify_group_level(capsys):
    code, out, _ = run_cli(capsys, "verify", "--n", "2", "--format", "pretty")
    assert code == 0
    assert "all checks passed" in out


def test_verify_with_alphabet_n3(capsys):
    # at odd n every check passes, including criterion equivalence
    code, out, _ = run_cli(capsys, "verify", "--n", "3", "--m", "2", "--format", "pretty")
    assert code == 0
    assert "criterion_equivalence" in out


def test_verify_reports_prediction_failure_at_even_n(capsys):
    # at n=2 the exhaustive search contradicts the psi prediction; verify
    # surfaces that honestly with a nonzero exit code
    code, out, _ = run_cli(capsys, "verify", "--n", "2", "--m", "2")
    assert code == 1
    payload = json.loads(out)
    failing = [c for c in payload["checks"] if not c["ok"]]
    assert [c["name"] for c in failing] == ["criterion_equivalence"]
    assert "psi:1" in failing[0]["detail"]
