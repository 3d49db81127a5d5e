"""Tests for the base locus: standard cases, base curves, point, transport."""

import random

import pytest

from cremona_locus.core.baselocus import (
    base_locus,
    base_locus_standard,
    classify_standard,
    enumerate_base_curves,
    is_standard_up_to_order,
    transport_cross_check,
    transported_base_curves,
)
from cremona_locus.core.lattice import (
    PAIRS,
    anticanonical_degree,
    intersect,
    make_divisor,
    minus_one_curve,
    minus_one_excess,
    pair_excess,
)
from cremona_locus.core.reduction import fixed_components, is_empty, reduce_to_standard
from cremona_locus.exceptions import EmptySystemError, InconsistencyError, PreconditionError
from cremona_locus.models.classes import MinusOneCurveId
from cremona_locus.models.report import StandardCase

EXAMPLE_CURVES = [
    ((0, 1, 2), 2),
    ((0, 1, 3), 2),
    ((0, 1, 4), 2),
    ((0, 1, 5), 1),
    ((0, 2, 3), 1),
    ((0, 2, 4), 1),
    ((0, 3, 4), 1),
    ((1, 6, 7), 1),
    ((1, 6, 8), 1),
    ((1, 7, 8), 1),
]


def curve_keys(curves):
    return [(curve.id.key, curve.mult) for curve in curves]


def test_classify_standard():
    """Test the four standard cases."""
    assert classify_standard(make_divisor(6, [3] * 8)) is StandardCase.ANTICANONICAL_CURVE
    assert classify_standard(make_divisor(4, [2] * 7 + [1])) is StandardCase.ISOLATED_POINT
    assert classify_standard(make_divisor(3, [3, 3])) is StandardCase.LINES
    assert classify_standard(make_divisor(4, [2, 2, 1])) is StandardCase.BASE_POINT_FREE
    assert classify_standard(make_divisor(2, [0, 1, 1, 1, 1, 1, 1, 1])) is (
        StandardCase.ISOLATED_POINT
    )
    with pytest.raises(PreconditionError):
        classify_standard(make_divisor(5, [4, 3, 3, 3, 2, 1, 1, 1]))


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_anticanonical_family(m):
    """Test Bs(L3(2m; m^8)) = m D_Q8."""
    locus = base_locus(make_divisor(2 * m, [m] * 8))
    assert locus.dq8_mult == m
    assert locus.curves == ()
    assert locus.point is None
    assert locus.fixed.is_empty
    assert anticanonical_degree(locus.residual) == 0


@pytest.mark.parametrize("m", [1, 2, 3])
def test_point_family(m):
    """Test Bs(L3(2m; m^7, m-1)) = mP with P described by the seven points 1..7."""
    locus = base_locus(make_divisor(2 * m, [m] * 7 + [m - 1]))
    assert locus.point is not None
    assert locus.point.mult == m
    assert locus.point.seven == (1, 2, 3, 4, 5, 6, 7)
    assert locus.curves == ()
    assert locus.dq8_mult == 0


def test_point_family_relabelled():
    """Test that the seven labels follow the points with full multiplicity."""
    locus = base_locus_standard(make_divisor(2, [0, 1, 1, 1, 1, 1, 1, 1]))
    assert locus.point.seven == (2, 3, 4, 5, 6, 7, 8)


def test_lines_case():
    """Test Bs(L3(3; 3,3)) = 3 l_{1,2}."""
    locus = base_locus(make_divisor(3, [3, 3]))
    assert locus.standard_case is StandardCase.LINES
    assert curve_keys(locus.curves) == [((0, 1, 2), 3)]


def test_lines_case_matches_pair_excess():
    """Test that standard case-(4) classes list exactly the lines with t > 0."""
    rng = random.Random(12)
    checked = 0
    while checked < 50:
        d = rng.randint(2, 12)
        divisor = make_divisor(d, sorted((rng.randint(0, d) for _ in range(8)), reverse=True))
        if not is_standard_up_to_order(divisor) or is_empty(divisor):
            continue
        if classify_standard(divisor) is not StandardCase.LINES:
            continue
        expected = sorted(
            ((0, i, j), pair_excess(divisor, i, j))
            for i, j in PAIRS
            if pair_excess(divisor, i, j) > 0
        )
        assert curve_keys(base_locus(divisor).curves) == expected
        checked += 1


def test_base_point_free_case():
    """Test a standard class outside the three special cases."""
    locus = base_locus(make_divisor(4, [2, 2, 1]))
    assert locus.is_base_point_free
    assert locus.standard_case is StandardCase.BASE_POINT_FREE


def test_base_locus_standard_preconditions():
    """Test that base_locus_standard wants a non-empty standard class."""
    with pytest.raises(PreconditionError):
        base_locus_standard(make_divisor(15, [13, 10, 9, 7, 6, 3, 3, 2]))
    with pytest.raises(PreconditionError):
        base_locus_standard(make_divisor(2, [3]))


def test_worked_example_base_locus(example_divisor, example_residual):
    """Test the complete base locus of the worked example."""
    locus = base_locus(example_divisor)
    assert len(locus.fixed.items) == 4
    assert [item.mult for item in locus.fixed.items] == [1, 2, 1, 1]
    assert locus.residual == example_residual
    assert curve_keys(locus.curves) == EXAMPLE_CURVES
    assert locus.dq8_mult == 0
    assert locus.point is None


def test_enumerate_base_curves(example_residual):
    """Test the ten (-1)-curves of the residual and their multiplicities."""
    curves = enumerate_base_curves(example_residual)
    assert curve_keys(curves) == EXAMPLE_CURVES
    for curve in curves:
        assert intersect(example_residual, minus_one_curve(curve.id)) == -curve.mult


def test_enumerate_rejects_non_positive_k():
    """Test the K >= 1 guard."""
    with pytest.raises(InconsistencyError):
        enumerate_base_curves(make_divisor(2, [1] * 8))


def test_double_plane_base_locus():
    """Test Bs(L3(2; 2^3)) = 2H and nothing else."""
    locus = base_locus(make_divisor(2, [2, 2, 2]))
    assert [(item.divisor, item.mult) for item in locus.fixed.items] == [
        (make_divisor(1, [1, 1, 1]), 2)
    ]
    assert locus.curves == ()
    assert locus.dq8_mult == 0
    assert locus.point is None


def test_empty_system_has_no_base_locus():
    """Test that base_locus raises on empty systems."""
    with pytest.raises(EmptySystemError):
        base_locus(make_divisor(2, [3]))


def test_anticanonical_one_residual():
    """Test a non-standard K = 1 class: three lines plus the isolated point."""
    divisor = make_divisor(3, [1, 1, 1, 1, 2, 2, 2, 1])
    locus = base_locus(divisor)
    assert locus.fixed.is_empty
    assert curve_keys(locus.curves) == [((0, 5, 6), 1), ((0, 5, 7), 1), ((0, 6, 7), 1)]
    assert locus.point.mult == 1
    assert locus.point.seven == (2, 3, 4, 5, 6, 7, 8)
    assert locus.trace_len == 1
    assert transport_cross_check(divisor)


def test_standard_classes_have_no_higher_curves():
    """Test t_a^{b,c} <= 0 for 1 <= a <= 6 on random non-empty standard classes."""
    rng = random.Random(13)
    checked = 0
    while checked < 200:
        d = rng.randint(0, 12)
        divisor = make_divisor(d, sorted((rng.randint(0, d) for _ in range(8)), reverse=True))
        if not is_standard_up_to_order(divisor) or is_empty(divisor):
            continue
        for a in range(1, 7):
            for b, c in PAIRS:
                assert minus_one_excess(divisor, MinusOneCurveId(a=a, b=b, c=c)) <= 0
        checked += 1


def test_transport_cross_check_examples(example_residual):
    """Test the transport check on the example and on a standard class."""
    assert transport_cross_check(example_residual)
    assert curve_keys(transported_base_curves(example_residual)) == EXAMPLE_CURVES
    assert transport_cross_check(make_divisor(3, [3, 3]))
    with pytest.raises(PreconditionError):
        transported_base_curves(make_divisor(15, [13, 10, 9, 7, 6, 3, 3, 2]))


def random_fixed_free_non_standard(rng: random.Random, max_degree: int = 20):
    """Residuals of random systems that are not standard up to order."""
    while True:
        d = rng.randint(2, max_degree)
        divisor = make_divisor(d, [rng.randint(0, d) for _ in range(8)])
        if is_empty(divisor):
            continue
        _, residual = fixed_components(divisor)
        if not is_standard_up_to_order(residual):
            return residual


def test_transport_cross_check_random():
    """Test that transported lines equal the enumeration on random residuals."""
    rng = random.Random(14)
    for _ in range(40):
        residual = random_fixed_free_non_standard(rng)
        assert transport_cross_check(residual), str(residual)


def test_base_locus_invariants():
    """Test the multiplicity, D_Q8 and point invariants on random systems."""
    rng = random.Random(15)
    for _ in range(150):
        d = rng.randint(1, 14)
        divisor = make_divisor(d, [rng.randint(0, d) for _ in range(8)])
        if is_empty(divisor):
            continue
        locus = base_locus(divisor)
        for curve in locus.curves:
            assert minus_one_excess(locus.residual, curve.id) == curve.mult
        if locus.dq8_mult > 0:
            assert anticanonical_degree(locus.residual) == 0
        assert (locus.point is not None) == (anticanonical_degree(locus.residual) == 1)


def test_k_one_classes_reduce_to_the_point_family():
    """Test that fixed-free K = 1 classes end at L3(2m; m^7, m-1)."""
    rng = random.Random(16)
    found = 0
    for _ in range(3000):
        d = rng.randint(1, 16)
        mults = [rng.randint(0, d) for _ in range(7)]
        last = 4 * d - 1 - sum(mults)
        if not 0 <= last <= d:
            continue
        divisor = make_divisor(d, mults + [last])
        if is_empty(divisor):
            continue
        _, residual = fixed_components(divisor)
        if anticanonical_degree(residual) != 1:
            continue
        standard = reduce_to_standard(residual).standard
        m = standard.mult(1)
        assert m >= 1
        assert standard == make_divisor(2 * m, [m] * 7 + [m - 1])
        found += 1
    assert found > 0
