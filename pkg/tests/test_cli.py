import json

from click.testing import CliRunner

from pdoring.cli import Session, main, run_line, run_script


def _run(script: str, *args):
    return CliRunner().invoke(main, list(args), input=script)


def test_reads_standard_input():
    result = _run("ring zn 4\n# a comment\n\neval 3*x^2 + 1\n")
    assert result.exit_code == 0
    assert result.output.splitlines() == ["ring Z4: order 4, unital, commutative", "3*x^2 + 1"]


def test_failures_do_not_stop_the_script():
    result = _run("ring zn 4\neval y\neval x\n")
    assert result.exit_code == 1
    assert result.output.splitlines() == [
        "ring Z4: order 4, unital, commutative",
        "error: unknown identifier 'y' (at position 0)",
        "x",
    ]


def test_script_file_argument(tmp_path):
    path = tmp_path / "basics.txt"
    path.write_text("ring zn 8\nradical prime\n", encoding="utf-8")
    result = CliRunner().invoke(main, [str(path)])
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == "{0, 2, 4, 6}"


def test_precision_option():
    result = _run("ring fixture trivext_swap\neval x^-1 * b1\n", "--precision", "2")
    assert result.output.splitlines()[-1] == "b1*x^-1 + b2*x^-2 + b1*x^-3 + O(x^-4)"


def test_report_command_writes_collected_reports(tmp_path):
    path = tmp_path / "reports" / "z4.txt"
    result = _run(f"ring zn 4\nverify delta_compat --session\nreport --out {path}\n")
    assert result.exit_code == 0
    assert result.output.splitlines()[-1] == f"wrote 1 reports to {path}"
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0].split() == ["suite", "fixture", "status", "passed", "cases", "ms"]
    assert lines[-1] == "1 reports, 8 cases, 0 not passing"


def test_structured_output(tmp_path):
    out = tmp_path / "all.jsonl"
    result = _run("ring zn 4\nverify delta_compat --session --seed 5\n", "--format", "structured", "--out", str(out))
    assert result.exit_code == 0
    shown = json.loads(result.output.splitlines()[-1])
    assert shown["suite"] == "delta_compat"
    assert shown["cases_run"] == 8
    assert shown["seed"] == 5
    assert "elapsed_ms" not in shown
    written = json.loads(out.read_text(encoding="utf-8").splitlines()[0])
    assert written["status"] == "passed"
    assert "elapsed_ms" in written


def test_usage_errors():
    result = _run("ring zn 4\nradical foo\nlet f a\nannseries\nprecision 0\n")
    assert result.exit_code == 1
    errors = result.output.splitlines()[1:]
    assert len(errors) == 4
    assert all(line.startswith("error: ") for line in errors)
    assert "foo" in errors[0]
    assert errors[1] == "error: let needs '=' (hint: let f = a*x + 1)"
    assert errors[2] == "error: annseries needs an ideal (hint: annseries whole, or annseries <generators>)"


def test_malformed_ring_definition():
    result = _run("ring zn four\n")
    assert result.exit_code == 1
    assert result.output.startswith("error: malformed ring definition 'zn four'")


def test_help_lists_commands():
    result = _run("help\n")
    assert result.exit_code == 0
    shown = result.output
    for command in ("ring", "derivation", "let", "eval", "radical", "annseries", "tnilp", "verify", "precision",
                    "report", "elements"):
        assert f"{command} " in shown or f"{command}:" in shown


def test_run_line_and_run_script_report_success():
    session = Session()
    assert not run_line(session, "eval x")
    assert run_line(session, "ring zn 4")
    assert run_script(session, ["", "# nothing", "tnilp 2"])
    assert not run_script(session, ["tnilp 1, 2", "let 2f = x"])
    assert session.ring.name == "Z4"


def test_derivation_violations_keep_the_old_derivation():
    result = _run("ring zn 4\nderivation table 0,1,2,3\neval x*3\n")
    assert result.exit_code == 1
    lines = result.output.splitlines()
    assert lines[1].startswith("derivation violation: Leibniz rule")
    assert lines[-1] == "3*x"
