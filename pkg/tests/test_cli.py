import io
import subprocess
import sys

import pytest

from fdsolve.cli import RunConfig, main, run
from fdsolve.errors import FdSyntaxError
from fdsolve.modelfile import parse_model, parse_model_text


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, text, name="m.fd"):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


# -- model files -------------------------------------------------------------------------


def test_parse_small_model(tmp_path):
    mf = parse_model(write(tmp_path, "var x in 1..3; var y in 1..3; x #\\= y; solve satisfy;"))
    assert mf.names == ["x", "y"]
    assert len(mf.constraints) == 1 and mf.goal == "satisfy"


def test_parse_objective():
    mf = parse_model_text("var x, y in 0..4;\nsolve minimize x+y;")
    assert mf.goal == "minimize"
    assert mf.objective == ("+", ("var", "x"), ("var", "y"))


def test_undeclared_name_reports_identifier_and_position():
    with pytest.raises(FdSyntaxError) as e:
        parse_model_text("var x in 1..3;\nx #= zed + 1;")
    assert "zed" in str(e.value) and e.value.line == 2


def test_syntax_errors():
    for text in ("var x in 3..1;", "var x in 1..3; var x in 1..2;", "var x in 1..3; x #= ;",
                 "var x in 1..3; solve satisfy; solve satisfy;", "var x in 1..3 x #= 1;"):
        with pytest.raises(FdSyntaxError):
            parse_model_text(text)


def test_comments_and_sum():
    mf = parse_model_text("% header\nvar a, b, c in 0..2; % trailing\nsum(a, b, c) #= 6;")
    m, env, _ = mf.build()
    assert [list(s) for s in m.solutions()] == [[2, 2, 2]]


def test_run_reports_objective():
    mf = parse_model_text("var x, y in 0..3; x + y #=< 4; solve maximize 3*x + y;")
    r = run(mf, RunConfig())
    assert r.objective == 10 and [list(s) for s in r.solutions] == [[3, 1]]
    assert r.status == 0


# -- exit codes and output ---------------------------------------------------------------


def test_all_solutions(tmp_path):
    code, out, err = call(write(tmp_path, "var x, y in 1..3; x + y #= 4; x #\\= y;"))
    assert code == 0 and out.split() == ["[1,3]", "[3,1]"]


def test_first_only(tmp_path):
    code, out, _ = call(write(tmp_path, "var x, y in 1..3; x + y #= 4; x #\\= y;"), "--first")
    assert code == 0 and out.split() == ["[1,3]"]


def test_unsatisfiable(tmp_path):
    code, out, err = call(write(tmp_path, "var x in 1..3; x #> 5;"))
    assert code == 1 and out == "" and "unsatisfiable" in err


def test_parse_errors_exit_2(tmp_path):
    assert call(write(tmp_path, "var x in 1..3; y #= 1;"))[0] == 2
    assert call(write(tmp_path, "var x, y in 1..3; x * y #= 2;"))[0] == 2
    assert call(str(tmp_path / "missing.fd"))[0] == 2
    assert call("queens", "8", "--level", "asm")[0] == 2


def test_domain_outside_universe_is_a_usage_error(tmp_path):
    path = write(tmp_path, "var x in -3..3; x #> 1;")
    code, _, err = call(path)
    assert code == 2 and "universe" in err
    code, out, _ = call(path, "--range", "open")
    assert code == 0 and out.split() == ["[2]", "[3]"]


def test_universe_from_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("FD_DEFAULT_UNIVERSE", "-10..10")
    code, out, _ = call(write(tmp_path, "var x in -3..3; x #< -1;"))
    assert code == 0 and out.split() == ["[-3]", "[-2]"]


def test_stats_go_to_stderr_and_repeat(tmp_path):
    path = write(tmp_path, "var a, b, c in 0..5; a + b #= c; a #< b;")
    first = call(path, "--stats", "--label", "ff")
    second = call(path, "--stats", "--label", "ff")
    strip = lambda err: [l for l in err.splitlines() if not l.startswith("time=")]
    assert first[1] == second[1]
    assert strip(first[2]) == strip(second[2])
    keys = dict(l.split("=", 1) for l in first[2].splitlines())
    assert {"tells", "prunes", "failures", "backtracks", "solutions", "time"} <= set(keys)


def test_queens_commands():
    code, out, _ = call("queens", "4", "--all")
    assert code == 0 and out.split() == ["[2,4,1,3]", "[3,1,4,2]"]
    code, out, _ = call("queens", "8", "--level", "clpfd", "--all")
    assert len(out.split()) == 92
    code, out, _ = call("queens", "3", "--all")
    assert code == 1


def test_queens_bench_table():
    code, out, _ = call("queens", "8", "--bench", "--repeats", "1")
    assert code == 0
    lines = out.splitlines()
    assert [l.split()[0] for l in lines[2:]] == ["clpfd", "fd", "idx", "kernel"]


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "fdsolve.cli", "queens", "4"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.split() == ["[2,4,1,3]"]
