"""Tests for the L3(d; m^r) notation."""

import random

import pytest

from cremona_locus.core.lattice import make_divisor
from cremona_locus.exceptions import NotationParseError, TooManyPointsError
from cremona_locus.utils.notation import (
    parse_multiplicities,
    parse_system,
    render_system,
)


def test_parse_worked_example():
    """Test that exponents expand and the class is padded."""
    divisor = parse_system("L3(15; 13,10,9,7,6,3^2,2)")
    assert divisor == make_divisor(15, [13, 10, 9, 7, 6, 3, 3, 2])


def test_parse_variants():
    """Test optional spaces, comma separator and missing multiplicities."""
    assert parse_system("L3(2;1^8)") == make_divisor(2, [1] * 8)
    assert parse_system("  L3( 2 , 1 ^ 7 )  ") == make_divisor(2, [1] * 7)
    assert parse_system("L3(4)") == make_divisor(4)
    assert parse_system("l3(3; 1^6)") == make_divisor(3, [1] * 6)
    assert parse_multiplicities("L3(2; 2^3)") == (2, [2, 2, 2])


def test_parse_negative_entries():
    """Test that internal classes can be written down."""
    assert parse_system("L3(1; -1,0^2,-2)") == make_divisor(1, [-1, 0, 0, -2])


def test_too_many_points():
    """Test that more than 8 multiplicities are rejected."""
    with pytest.raises(TooManyPointsError):
        parse_system("L3(2; 1^9)")
    with pytest.raises(TooManyPointsError):
        parse_system("L3(2; 1^4,2^5)")


def test_parse_error_carries_position():
    """Test that a parse error reports where it happened."""
    with pytest.raises(NotationParseError) as excinfo:
        parse_system("L3(2 1)")
    assert excinfo.value.position == 5
    assert excinfo.value.caret() == "L3(2 1)\n     ^"


@pytest.mark.parametrize(
    "text",
    ["", "X3(2;1)", "L3(2;1", "L3(;1)", "L3(2;1^0)", "L3(2;1,)", "L3(2;1) extra"],
)
def test_malformed_notation(text):
    """Test that malformed strings raise NotationParseError."""
    with pytest.raises(NotationParseError):
        parse_system(text)


def test_render_groups_and_trims():
    """Test grouping of equal neighbours and dropping of trailing zeros."""
    assert render_system(make_divisor(15, [13, 10, 9, 7, 6, 3, 3, 2])) == (
        "L3(15; 13,10,9,7,6,3^2,2)"
    )
    assert render_system(make_divisor(4, [3, 3, 2, 2, 2, 1, 1, 1])) == "L3(4; 3^2,2^3,1^3)"
    assert render_system(make_divisor(2, [2, 1, 1, 1, 1, 0, 1, 0])) == "L3(2; 2,1^4,0,1)"
    assert render_system(make_divisor(0)) == "L3(0)"
    assert str(make_divisor(1, [1, 1, 0, 0, -1, -1, -1, -2])) == "L3(1; 1^2,0^2,-1^3,-2)"


def test_render_parse_round_trip():
    """Test parse(render(x)) == x on random classes, negatives included."""
    rng = random.Random(7)
    for _ in range(200):
        divisor = make_divisor(
            rng.randint(-3, 20), [rng.randint(-3, 6) for _ in range(rng.randint(0, 8))]
        )
        assert parse_system(render_system(divisor)) == divisor
