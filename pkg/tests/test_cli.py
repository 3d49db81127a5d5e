"""Tests for the command-line front end."""

import json
from pathlib import Path

import pytest

from cremona_locus.cli import (
    EXIT_EMPTY,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY,
    check_fixture,
    main,
    parse_fixture_line,
)

EXAMPLE_SYSTEM = "L3(15; 13,10,9,7,6,3^2,2)"
FIXTURES = Path(__file__).parent.parent / "fixtures" / "regression.fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_dim(capsys):
    """Test the dimension command."""
    code, out, _ = run(capsys, "dim", EXAMPLE_SYSTEM)
    assert code == EXIT_OK
    assert "h0 = 2, projective dimension 1" in out


def test_dim_of_empty_system(capsys):
    """Test that dim reports an empty system without failing."""
    code, out, _ = run(capsys, "dim", "L3(2; 3)")
    assert code == EXIT_OK
    assert "h0 = 0" in out
    assert "(empty)" in out


def test_dim_with_oracle(capsys):
    """Test the interpolation cross-check."""
    code, out, _ = run(capsys, "dim", "L3(4; 2^8)", "--oracle", "--seed", "3")
    assert code == EXIT_OK
    assert "oracle h0 = 3 (match; seed 3" in out


def test_dim_json(capsys):
    """Test machine-readable dim output."""
    code, out, _ = run(capsys, "dim", "L3(2; 1^8)", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["h0"] == 2
    assert data["system"] == {"d": 2, "m": [1] * 8}
    assert data["curves"] is None


def test_fixed_worked_example(capsys):
    """Test the four fixed components of the worked example."""
    code, out, _ = run(capsys, "fixed", EXAMPLE_SYSTEM)
    assert code == EXIT_OK
    assert out.strip() == (
        "F1 in L3(4; 3^2,2^3,1^3) x1; F2 in L3(1; 1^3) x2; "
        "F3 in L3(2; 2,1^4,0,1) x1; F4 in L3(2; 2,1^5) x1; "
        "residual L3(5; 4,3^3,2,1^3)"
    )


def test_fixed_double_plane(capsys):
    """Test that L3(2; 2^3) is twice the plane through P1, P2, P3."""
    _, out, _ = run(capsys, "fixed", "L3(2; 2^3)")
    assert out.strip() == "F1 in L3(1; 1^3) x2; residual L3(0)"


def test_fixed_none(capsys):
    """Test a system without fixed part."""
    _, out, _ = run(capsys, "fixed", "L3(4; 2^8)")
    assert out.strip() == "no fixed components; residual L3(4; 2^8)"


def test_fixed_of_empty_system(capsys):
    """Test exit code 2 for an empty system."""
    code, out, _ = run(capsys, "fixed", "L3(2; 3)")
    assert code == EXIT_EMPTY
    assert "empty system" in out


def test_bs_worked_example(capsys):
    """Test the human-readable base locus."""
    code, out, _ = run(capsys, "bs", EXAMPLE_SYSTEM)
    assert code == EXIT_OK
    assert "2*C_0^{1,2} + 2*C_0^{1,3}" in out
    assert "C_1^{7,8}" in out
    assert "residual L3(5; 4,3^3,2,1^3)" in out


def test_bs_anticanonical(capsys):
    """Test that L3(6; 3^8) has 3 * D_Q8 as base locus."""
    code, out, _ = run(capsys, "bs", "L3(6; 3^8)")
    assert code == EXIT_OK
    assert "3 * D_Q8" in out


def test_bs_point(capsys):
    """Test the isolated point line of the output."""
    _, out, _ = run(capsys, "bs", "L3(4; 2^7,1)")
    assert "2 * P(points 1..7)" in out
    assert "D_Q8" in out


def test_bs_base_point_free(capsys):
    """Test a base point free system."""
    _, out, _ = run(capsys, "bs", "L3(4; 2,2,1)")
    assert "base point free" in out


def test_bs_json(capsys):
    """Test the JSON base locus of the worked example."""
    code, out, _ = run(capsys, "bs", EXAMPLE_SYSTEM, "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert data["h0"] == 2
    assert data["residual"] == {"d": 5, "m": [4, 3, 3, 3, 2, 1, 1, 1]}
    assert len(data["fixed"]) == 4
    assert len(data["curves"]) == 10
    assert data["trace_len"] == 3
    assert data["point"] is None


def test_bs_of_empty_system(capsys):
    """Test exit code 2 from bs."""
    code, _, _ = run(capsys, "bs", "L3(1; 2^4)")
    assert code == EXIT_EMPTY


def test_reduce_worked_example(capsys):
    """Test the reduction diagram of the worked example."""
    code, out, _ = run(capsys, "reduce", EXAMPLE_SYSTEM)
    lines = out.strip().splitlines()
    assert code == EXIT_OK
    degrees = [int(line.split("|")[0]) for line in lines[2:-1]]
    assert degrees == [15, 6, 2, 1]
    assert lines[-1] == "standard form: L3(1; 1^2,0^2,-1^3,-2)"
    assert "*" in lines[2]


def test_reduce_to_a_plane(capsys):
    """Test that L3(3; 2^4) reduces to L3(1) in one step."""
    _, out, _ = run(capsys, "reduce", "L3(3; 2^4)")
    lines = out.strip().splitlines()
    assert len(lines[2:-1]) == 2
    assert lines[-1] == "standard form: L3(1)"


def test_reduce_of_empty_system(capsys):
    """Test the reduce message when the degree drops below zero."""
    code, out, _ = run(capsys, "reduce", "L3(1; 2^4)")
    assert code == EXIT_OK
    assert "the system is empty" in out


def test_verify(capsys):
    """Test the verification battery on the net of quadrics through 7 points."""
    code, out, _ = run(capsys, "verify", "L3(2; 1^7)")
    assert code == EXIT_OK
    assert "All checks passed" in out


def test_verify_json(capsys):
    """Test that verify --json lists every check."""
    code, out, _ = run(capsys, "verify", "L3(2; 2^3)", "--json")
    data = json.loads(out)
    assert code == EXIT_OK
    names = [check["name"] for check in data["checks"]]
    assert names[0] == "pipeline"
    assert "dimension" in names


def test_verify_of_empty_system(capsys):
    """Test that verify refuses an empty system."""
    code, _, _ = run(capsys, "verify", "L3(2; 3)")
    assert code == EXIT_EMPTY


@pytest.mark.parametrize(
    "argv",
    [
        ["dim", "L3(2; 1^9)"],
        ["dim", "L3(2; 1"],
        ["dim", "L3(-1)"],
        ["dim", "L3(2; -1)"],
        ["verify", "L3(2; 1^7)", "--prime", "101"],
    ],
)
def test_bad_input_exit_codes(capsys, argv):
    """Test exit code 1 for parse errors and bad parameters."""
    code, _, err = run(capsys, *argv)
    assert code == EXIT_USAGE
    assert err


def test_parse_error_shows_caret(capsys):
    """Test that parse errors point at the offending position."""
    _, _, err = run(capsys, "dim", "L3(2; x)")
    assert "^" in err


def test_missing_command(capsys):
    """Test that a command or --fixtures is required."""
    code, _, _ = run(capsys)
    assert code == EXIT_USAGE


def test_unknown_command_exits_with_usage_code():
    """Test that argparse usage errors use exit code 1."""
    with pytest.raises(SystemExit) as excinfo:
        main(["frobnicate", "L3(1)"])
    assert excinfo.value.code == EXIT_USAGE


def test_parse_fixture_line():
    """Test fixture line splitting."""
    assert parse_fixture_line("# comment") is None
    assert parse_fixture_line("   ") is None
    text, expected = parse_fixture_line('L3(2; 1^8) -> {"h0": 2}')
    assert text == "L3(2; 1^8)"
    assert expected == {"h0": 2}
    with pytest.raises(ValueError):
        parse_fixture_line("L3(2; 1^8)")


def test_check_fixture_reports_differences():
    """Test that only mismatching keys are reported."""
    assert check_fixture("L3(2; 1^8)", {"h0": 2, "dq8_mult": 1}) == []
    problems = check_fixture("L3(2; 1^8)", {"h0": 3, "bogus": 1})
    assert len(problems) == 2


def test_fixture_file(capsys):
    """Test that the bundled fixture file passes."""
    code, out, _ = run(capsys, "--fixtures", str(FIXTURES))
    assert code == EXIT_OK
    assert "FAIL" not in out


def test_failing_fixture(tmp_path, capsys):
    """Test exit code 3 and the FAIL line for a wrong expectation."""
    path = tmp_path / "bad.fixtures"
    path.write_text('L3(2; 1^8) -> {"h0": 5}\n', encoding="utf-8")
    code, out, _ = run(capsys, "--fixtures", str(path))
    assert code == EXIT_VERIFY
    assert "FAIL line 1" in out
