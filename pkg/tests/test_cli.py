import io
import subprocess
import sys

import pytest

from singnbe.cli import RunConfig, main, run_text

from conftest import CORPUS


def run(text, command="check", **kw):
    out = io.StringIO()
    status = run_text(text, RunConfig(command, "input.tt", **kw), out)
    return status, out.getvalue()


def test_accepts_identity():
    status, out = run("check \\x. x : Nat -> Nat")
    assert status == 0
    assert "ACCEPT" in out


def test_normalize_singleton_variable():
    status, out = run("assume v : {zero : Nat}\nnormalize v : Nat")
    assert status == 0
    assert out.splitlines()[-1] == "zero"


def test_star_is_rejected_by_default():
    status, out = run("check box * : Prf (Prf Nat)")
    assert status == 1
    assert "StarInUserSyntax" in out
    status, out = run("check box * : Prf (Prf Nat)", allow_star=True)
    assert status == 0
    # box a : Prf A still needs a : A
    status, out = run("check box * : Prf Nat", allow_star=True)
    assert status == 1
    assert "TypeMismatch" in out


def test_parse_errors_exit_2(capsys):
    status, out = run("check c{3,5} : Enum 3")
    assert status == 2
    assert "out of range" in capsys.readouterr().err


def test_machine_lines():
    text = "assume n : Nat\ncheck n : Enum 2\nnormalize suc n : Nat\ninfer n"
    status, out = run(text, machine=True)
    assert status == 1
    lines = [line.split("\t") for line in out.splitlines()]
    assert [l[:3] for l in lines] == [
        ["0", "assume", "ACCEPT"],
        ["1", "check", "REJECT"],
        ["2", "normalize", "ACCEPT"],
        ["3", "infer", "ACCEPT"],
    ]
    assert lines[1][3].startswith("TypeMismatch")
    assert lines[2][3] == "suc n"
    assert lines[3][3] == "Nat"


def test_machine_output_is_deterministic():
    text = (CORPUS / "vectors.tt").read_text()
    assert run(text, "normalize", machine=True) == run(text, "normalize", machine=True)


def test_normalize_and_infer_commands_add_output():
    text = "assume f : Nat -> Nat\ncheck f : Nat -> Nat\ncheck f zero : Nat"
    _, out = run(text, "normalize", machine=True)
    assert out.splitlines()[1].split("\t")[3] == "\\x1. f x1"
    _, out = run(text, "infer", machine=True)
    assert out.splitlines()[1].split("\t")[3] == "Nat -> Nat"
    assert out.splitlines()[2].split("\t")[3] == "Nat"
    _, out = run(text, "check", machine=True)
    assert out.splitlines()[1].split("\t")[3] == ""


def test_rejected_declarations_do_not_extend_the_context():
    status, out = run("assume x : zero\ncheck x : Nat", machine=True)
    assert status == 1
    assert "NotAType" in out.splitlines()[0]
    assert "UnboundName" in out.splitlines()[1]


def test_human_report_mentions_file_and_line():
    _, out = run("assume n : Nat\n\ncheck n : Enum 2")
    assert out.splitlines()[1].startswith("input.tt:3: REJECT check: TypeMismatch")
    assert "expected Enum 2" in out and "got Nat" in out


def test_main_usage_errors(tmp_path, capsys):
    assert main(["frobnicate", "x.tt"]) == 2
    assert main(["check", str(tmp_path / "missing.tt")]) == 2
    f = tmp_path / "ok.tt"
    f.write_text("check zero : Nat\n")
    assert main(["check", str(f), "--depth-limit", "5"]) == 2
    assert main(["check", str(f)]) == 0
    assert "ACCEPT" in capsys.readouterr().out


def test_depth_limit(tmp_path, capsys):
    f = tmp_path / "deep.tt"
    f.write_text("check " + "suc (" * 3000 + "zero" + ")" * 3000 + " : Nat\n")
    assert main(["check", str(f), "--depth-limit", "500"]) == 2
    assert "depth limit" in capsys.readouterr().err
    assert main(["check", str(f)]) == 0


@pytest.mark.parametrize("extra", [[], ["--machine"]])
def test_module_entry_point(extra):
    proc = subprocess.run([sys.executable, "-m", "singnbe", "normalize",
                           str(CORPUS / "worked_example.tt"), *extra],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[-1].endswith("zero")
