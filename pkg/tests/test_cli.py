import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from surreal.cli import Session, main, run_lines

GOLDEN = Path(__file__).parent / "golden"


def run(lines, **kw):
    out = io.StringIO()
    code = run_lines(lines, Session(), out, **kw)
    return code, out.getvalue()


def test_golden_transcript(monkeypatch, capsys):
    monkeypatch.chdir(GOLDEN)
    code = main(["--batch", "session.txt"])
    assert code == 1
    assert capsys.readouterr().out == (GOLDEN / "session.out").read_text()


def test_golden_covers_every_verb():
    text = (GOLDEN / "session.txt").read_text()
    commands = [l for l in text.splitlines() if l.strip() and not l.startswith("#")]
    assert len(commands) >= 40
    for verb in ["eval", "nf", "sign", "rank", "cmp", "simpler", "oz", "ozfloor", "gadd", "gmul",
                 "defgroup", "defdomain", "show", "check", "convex", "height", "help", "quit"]:
        assert any(l.startswith(":%s " % verb) or l == ":" + verb for l in commands), verb
    assert any(l.startswith("let ") for l in commands)


def test_transcript_is_byte_identical_across_processes():
    cmd = [sys.executable, "-m", "surreal.cli", "--batch", "session.txt"]
    a = subprocess.run(cmd, cwd=GOLDEN, capture_output=True)
    b = subprocess.run(cmd, cwd=GOLDEN, capture_output=True)
    assert a.stdout == b.stdout == (GOLDEN / "session.out").read_bytes()
    assert a.returncode == b.returncode == 1


def test_three_valid_commands():
    code, out = run(["w", ":sign 3/4", "{0 | 1}"], json_mode=True)
    records = [json.loads(l) for l in out.splitlines()]
    assert code == 0 and len(records) == 3
    assert [r["verb"] for r in records] == ["eval", "sign", "eval"]
    assert records[1]["value"] == "+-+"
    assert set(records[0]) == {"verb", "input", "ok", "value", "witness", "error", "micros"}


def test_cut_violation_record():
    code, out = run(["1", "{1 | 0}", "2"], json_mode=True)
    records = [json.loads(l) for l in out.splitlines()]
    assert code == 1 and len(records) == 3
    assert records[1]["ok"] is False and records[1]["error"]["code"] == "E_CUT"
    assert records[2]["value"] == "2"


def test_check_record_carries_witness():
    code, out = run([":defgroup t gamma: finite {0}; coeff 0 => gen{1/3}", ":check t"],
                    json_mode=True)
    rec = json.loads(out.splitlines()[1])
    assert rec["ok"] and rec["witness"] == {"exponent": "0", "member": "1/3", "missing": "1/2"}


def test_section9_spec_file_check():
    code, out = run([":defgroup s %s" % (GOLDEN / "section9.spec"), ":check s"])
    assert code == 0
    assert out.splitlines()[1] == "initial: pass; discrete: Discrete(w^(-1))"


def test_fail_fast_and_echo():
    code, out = run(["{1 | 0}", "2"], fail_fast=True)
    assert code == 1 and out.count("\n") == 1
    code, out = run(["1/2 + 1/2"], echo=True)
    assert out == ">>> 1/2 + 1/2\n1\n"


def test_comments_blank_lines_and_quit():
    code, out = run(["# note", "", "1", ":quit", "2"])
    assert code == 0 and out == "1\n"


def test_unicode_flag(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO("w^2 + w\n:sign w\n"))
    assert main(["--batch", "-", "--unicode"]) == 0
    assert capsys.readouterr().out == "ω^2 + ω\n(+,ω)\n"


def test_rank_bound_flag(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(":gadd 1/8, 1\n"))
    assert main(["--batch", "-", "--rank-bound", "3"]) == 1
    assert "E_PRECONDITION" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["--fuel", "0"], ["--batch", "/nonexistent/file"], ["--nope"]])
def test_usage_errors_exit_2(argv, capsys):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    assert code == 2


def test_error_codes_are_distinct():
    lines = ["w +", "{1 | 0}", ":sign 1/3", ":gadd w, 1", ":check none", "y"]
    code, out = run(lines, json_mode=True)
    codes = [json.loads(l)["error"]["code"] for l in out.splitlines()]
    assert codes == ["E_SYNTAX", "E_CUT", "E_UNSUPPORTED", "E_PRECONDITION", "E_COMMAND",
                     "E_PRECONDITION"]


def test_deep_nesting_is_controlled():
    code, out = run(["(" * 300 + "1" + ")" * 300])
    assert code == 1 and out.startswith("error[E_SYNTAX]")
