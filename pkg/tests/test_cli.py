import json
from pathlib import Path

import pytest

from ambicalc.cli import run_command
from ambicalc.documents import loads

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def fx(name: str) -> str:
    return str(FIXTURES / name)


@pytest.mark.parametrize(
    "argv",
    [
        ["check", fx("fix1_assignment.json")],
        ["check", fx("fix1_interval.json")],
        ["check", fx("fix1_ambiguity.json")],
        ["check", fx("fix1_incidence.json")],
        ["check", fx("fix1_probability.json")],
        ["check", fx("fix1_mass.json")],
        ["check", fx("fix2_ambiguity.json")],
        ["check", fx("fix3_assignment.json")],
        ["oracle", fx("fix1_interval.json")],
        ["oracle", fx("fix1_assignment.json")],
        ["extract", fx("fix1_interval.json")],
        ["build", fx("fix1_assignment.json")],
        ["ambiguity", fx("fix1_interval.json")],
        ["incidence", fx("fix1_assignment.json")],
        ["incidence", fx("fix1_assignment.json"), "--selector", "seed:7"],
        ["decompose", fx("fix1_interval.json")],
        ["compose", fx("fix1_incidence.json"), fx("fix1_ambiguity.json")],
        ["belief", fx("fix1_interval.json"), fx("fix1_probability.json")],
        ["from-mass", fx("fix1_mass.json")],
        ["fishburn", fx("fix1_interval.json"), fx("fix1_probability.json")],
        ["gen", "--kind", "assignment"],
        ["gen", "--kind", "probability", "--atoms", "2", "--situations", "5"],
        ["gen", "--kind", "incidence", "--seed", "9"],
        ["fuzz", "--trials", "5", "--atoms", "3", "--situations", "4"],
    ],
)
def test_subcommands_succeed(argv):
    code, text = run_command(argv)
    assert code == 0, text
    assert text


def test_check_reports_every_axiom(capsys):
    code, text = run_command(["check", fx("fix1_interval.json")])
    assert code == 0
    for axiom in ("f̄1", "f̄2", "f̄3", "f̄4", "duality", "f1", "f2", "f3", "f4", "sandwich"):
        assert f"{axiom} ✓" in text


def test_check_json_format():
    code, text = run_command(["check", fx("fix1_assignment.json"), "--format", "json"])
    assert code == 0
    data = json.loads(text)
    assert all(v["ok"] for v in data["verdicts"])


def test_build_matches_fixture_bytes():
    code, text = run_command(["build", fx("fix1_assignment.json")])
    assert code == 0
    assert text == (FIXTURES / "fix1_interval.json").read_text(encoding="utf-8")


def test_extract_build_roundtrip(tmp_path):
    out = tmp_path / "j.json"
    code, text = run_command(["extract", fx("fix1_interval.json"), "--out", str(out)])
    assert code == 0 and text == ""
    assert out.read_text(encoding="utf-8") == (FIXTURES / "fix1_assignment.json").read_text(
        encoding="utf-8"
    )


def test_check_failing_document(tmp_path):
    doc = {
        "kind": "assignment",
        "atoms": ["x", "y"],
        "situations": ["w1", "w2"],
        "body": {"x": ["w1", "w2"], "y": ["w2"]},
    }
    path = tmp_path / "overlap.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, text = run_command(["check", str(path)])
    assert code == 1
    assert "j3 ✗" in text


def test_validate_flag_rejects_bad_input(tmp_path):
    doc = {
        "kind": "assignment",
        "atoms": ["x"],
        "situations": ["w1", "w2"],
        "body": {"x": ["w1"]},
    }
    path = tmp_path / "uncovered.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, text = run_command(["build", str(path), "--validate"])
    assert code == 1
    assert "j2" in text


def test_compose_incompatible_pair_message():
    code, text = run_command(
        ["compose", fx("fix2_incidence.json"), fx("fix2_ambiguity.json")]
    )
    assert code == 1
    assert text == "error: compatibility fails at A={x}, B={y}"


def test_usage_errors_are_exit_2(tmp_path):
    assert run_command([])[0] == 2
    assert run_command(["no-such-command"])[0] == 2
    assert run_command(["check"])[0] == 2
    assert run_command(["check", str(tmp_path / "missing.json")])[0] == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{", encoding="utf-8")
    code, text = run_command(["check", str(garbled)])
    assert code == 2
    assert "error:" in text
    bad_key = tmp_path / "bad_key.json"
    bad_key.write_text(
        json.dumps(
            {
                "kind": "assignment",
                "atoms": ["x", "y"],
                "situations": ["w"],
                "body": {"y,x": ["w"]},
            }
        ),
        encoding="utf-8",
    )
    assert run_command(["check", str(bad_key)])[0] == 2
    assert run_command(["incidence", fx("fix1_assignment.json"), "--selector", "bogus"])[0] == 2


def test_explicit_selector_table(tmp_path):
    table = tmp_path / "sel.json"
    table.write_text(json.dumps({"x": "x", "y": "y", "x,y": "y"}), encoding="utf-8")
    code, text = run_command(
        ["incidence", fx("fix1_assignment.json"), "--selector", f"@{table}"]
    )
    assert code == 0
    _, inc = loads(text)
    assert inc.origin.targets == (0, 1, 1)
    # an entry outside its focal element is a domain failure, not a parse one
    table.write_text(json.dumps({"x": "y", "y": "y", "x,y": "y"}), encoding="utf-8")
    code, _ = run_command(
        ["incidence", fx("fix1_assignment.json"), "--selector", f"@{table}"]
    )
    assert code == 1


def test_decompose_to_files(tmp_path):
    inc_path = tmp_path / "inc.json"
    amb_path = tmp_path / "amb.json"
    code, text = run_command(
        [
            "decompose",
            fx("fix1_interval.json"),
            "--out-incidence",
            str(inc_path),
            "--out-ambiguity",
            str(amb_path),
        ]
    )
    assert code == 0 and text == ""
    assert inc_path.read_text(encoding="utf-8") == (FIXTURES / "fix1_incidence.json").read_text(
        encoding="utf-8"
    )
    assert amb_path.read_text(encoding="utf-8") == (FIXTURES / "fix1_ambiguity.json").read_text(
        encoding="utf-8"
    )


def test_decompose_combined_output():
    code, text = run_command(["decompose", fx("fix1_interval.json")])
    assert code == 0
    data = json.loads(text)
    assert data["incidence"]["kind"] == "incidence"
    assert data["ambiguity"]["kind"] == "ambiguity"


def test_belief_text_values():
    code, text = run_command(
        ["belief", fx("fix1_interval.json"), fx("fix1_probability.json")]
    )
    assert code == 0
    assert "{x} Bel=1/3 Pl=2/3 alpha=1/3" in text
    assert "bel-mass-identity ✓" in text
    assert "pl-complement ✓" in text


def test_belief_json_values():
    code, text = run_command(
        ["belief", fx("fix1_interval.json"), fx("fix1_probability.json"), "--format", "json"]
    )
    assert code == 0
    data = json.loads(text)
    assert data["belief"]["x"] == {"bel": "1/3", "pl": "2/3", "alpha": "1/3"}
    assert data["mass"]["body"] == {"x": "1/3", "y": "1/3", "x,y": "1/3"}


def test_from_mass_combined():
    code, text = run_command(["from-mass", fx("fix1_mass.json")])
    assert code == 0
    data = json.loads(text)
    assert data["probability"]["situations"] == ["w_x", "w_y", "w_x,y"]
    assert data["assignment"]["kind"] == "assignment"
    assert data["interval"]["kind"] == "interval"


def test_fishburn_output():
    code, text = run_command(
        ["fishburn", fx("fix1_interval.json"), fx("fix1_probability.json")]
    )
    assert code == 0
    for line in ("α1 ✓", "α2 ✓", "α3 ✓", "α(Θ)=0 ✓"):
        assert line in text


def test_gen_is_deterministic():
    argv = ["gen", "--kind", "assignment", "--atoms", "3", "--situations", "5", "--seed", "4"]
    assert run_command(argv) == run_command(argv)
    other = run_command(argv[:-1] + ["5"])
    assert other != run_command(argv)


def test_fuzz_cli_output():
    argv = ["fuzz", "--trials", "8", "--atoms", "3", "--situations", "4", "--seed", "2"]
    code, text = run_command(argv)
    assert code == 0
    assert "failures: none" in text
    assert run_command(argv) == (code, text)
    code_json, text_json = run_command(argv + ["--format", "json"])
    assert code_json == 0
    assert json.loads(text_json)["failures"] == []


def test_fuzz_fault_mode_cli():
    code, text = run_command(
        ["fuzz", "--trials", "6", "--fault-injection", "--atoms", "3", "--situations", "4"]
    )
    assert code == 0
    assert "mode: fault-injection" in text
    assert "fault-detected: pass=6 fail=0" in text
