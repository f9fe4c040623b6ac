"""Command line front end, driven in-process through main(argv)."""

import io
import subprocess
import sys

import hoa_validator
from ltl2aut import cli


def test_stats_output(capsys):
    assert cli.main(["--formula", "a U b", "--mode", "dra",
                     "--output", "stats"]) == 0
    out = capsys.readouterr().out
    assert "formula: a U b" in out
    assert "mode: dra" in out
    assert "states: " in out
    assert "rabin-pairs: 2" in out
    assert "time-ms: " in out


def test_hoa_output_validates(capsys):
    assert cli.main(["--formula", "a U b", "--mode", "nba"]) == 0
    out = capsys.readouterr().out
    summary = hoa_validator.validate(out)
    assert summary["acc_name"] == "Buchi"
    assert 'name: "a U b"' in out


def test_parse_error_exits_1(capsys):
    assert cli.main(["--formula", "a U )"]) == 1
    err = capsys.readouterr().err
    assert "parse error" in err


def test_resource_limit_exits_2(capsys):
    assert cli.main(["--formula", "F a & G b | a U c",
                     "--max-advice", "2"]) == 2
    assert "resource limit" in capsys.readouterr().err
    assert cli.main(["--formula", "G (a | X b)", "--max-states", "1"]) == 2


def test_check_against_oracle_passes(capsys):
    for mode in ("dra", "nba", "ldba"):
        assert cli.main(["--formula", "G (a | F b)", "--mode", mode,
                         "--check", "25", "--output", "stats"]) == 0


def test_check_mismatch_exits_3(capsys, monkeypatch):
    # A front end that lies about membership must be caught by --check.
    monkeypatch.setattr(cli, "accepts", lambda automaton, lasso: False)
    assert cli.main(["--formula", "tt", "--ap", "a", "--check", "5"]) == 3
    assert "mismatch" in capsys.readouterr().err


def test_declared_alphabet_orders_ap_line(capsys):
    assert cli.main(["--formula", "a U b", "--ap", "c,b,a"]) == 0
    out = capsys.readouterr().out
    assert 'AP: 3 "c" "b" "a"' in out
    hoa_validator.validate(out)


def test_undeclared_atom_is_a_parse_error(capsys):
    assert cli.main(["--formula", "a U b", "--ap", "a"]) == 1
    assert "unknown atom" in capsys.readouterr().err


def test_batch_mode_reports_worst_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin",
                        io.StringIO("a U b\n# comment\n\n)(\nG a\n"))
    assert cli.main(["--formula", "-", "--output", "stats"]) == 1
    captured = capsys.readouterr()
    assert "[exit 1] )(" in captured.err
    assert captured.out.count("formula: ") == 2


def test_module_entry_point():
    done = subprocess.run(
        [sys.executable, "-m", "ltl2aut", "--formula", "F a",
         "--output", "stats"],
        capture_output=True, text=True)
    assert done.returncode == 0
    assert "formula: F a" in done.stdout
