"""Tests for the Cremona action on classes and (-1)-curve ids."""

import logging
import random
from itertools import combinations

import pytest

from cremona_locus.core.cremona import (
    apply_permutation,
    cremona_curve,
    cremona_divisor,
    cremona_minus_one,
    is_edge_class,
    lowering_word,
    minus_one_orbit,
    sort_descending,
    undo_permutation,
)
from cremona_locus.core.lattice import (
    anticanonical_degree,
    dq8_class,
    intersect,
    iter_minus_one_ids,
    line_class,
    make_curve,
    make_divisor,
    minus_one_curve,
    quadric_class,
)
from cremona_locus.exceptions import PreconditionError
from cremona_locus.models.classes import MinusOneCurveId

ALL_BASES = list(combinations(range(1, 9), 4))


def random_divisor(rng: random.Random):
    return make_divisor(rng.randint(0, 20), [rng.randint(0, 12) for _ in range(8)])


def test_cremona_divisor_worked_example_rows():
    """Test the first and last steps of the worked reduction."""
    first = cremona_divisor(make_divisor(15, [13, 10, 9, 7, 6, 3, 3, 2]))
    assert first == make_divisor(6, [4, 1, 0, -2, 6, 3, 3, 2])

    last = cremona_divisor(make_divisor(2, [0, 1, 0, -2, 2, -1, -1, 2]), (1, 2, 5, 8))
    assert last == make_divisor(1, [-1, 0, 0, -2, 1, -1, -1, 1])


def test_cremona_divisor_fixed_when_k_is_zero():
    """Test that 2d = m1+m2+m3+m4 leaves the class unchanged."""
    divisor = make_divisor(4, [2, 2, 2, 2, 1, 1])
    assert cremona_divisor(divisor) == divisor


def test_cremona_divisor_on_distinguished_classes():
    """Test Cr(H), Cr(E_k) and Cr(S_i) = S_i for i >= 4."""
    assert cremona_divisor(make_divisor(1)) == make_divisor(3, [2, 2, 2, 2])
    assert cremona_divisor(make_divisor(0, [-1])) == make_divisor(1, [0, 1, 1, 1])
    for i in range(4, 9):
        assert cremona_divisor(quadric_class(i)) == quadric_class(i)


def test_cremona_divisor_rejects_bad_basis():
    """Test the basis validation."""
    with pytest.raises(PreconditionError):
        cremona_divisor(make_divisor(3), (1, 2, 3))
    with pytest.raises(PreconditionError):
        cremona_divisor(make_divisor(3), (1, 1, 2, 3))
    with pytest.raises(PreconditionError):
        cremona_divisor(make_divisor(3), (1, 2, 3, 9))


def test_cremona_curve_examples():
    """Test the skew-curve formula."""
    line_45 = make_curve(1, [0, 0, 0, 1, 1])
    assert cremona_curve(line_45) == line_45
    assert cremona_curve(make_curve(1)) == make_curve(3, [1, 1, 1, 1])
    assert cremona_curve(dq8_class()) == dq8_class()


def test_cremona_curve_warns_on_unverified_skewness(caplog):
    """Test that a class that is neither a (-1)-curve nor D_Q8 is logged at WARNING."""
    with caplog.at_level(logging.WARNING, logger="cremona_locus.core.cremona"):
        assert cremona_curve(make_curve(2)) == make_curve(6, [2, 2, 2, 2])
    assert "unverified skewness" in caplog.text

    caplog.clear()
    with caplog.at_level(logging.WARNING, logger="cremona_locus.core.cremona"):
        cremona_curve(make_curve(1, [0, 0, 0, 1, 1]))
    assert caplog.text == ""


def test_cremona_curve_rejects_edges():
    """Test that edge lines must go through cremona_minus_one."""
    assert is_edge_class(line_class(1, 2))
    assert not is_edge_class(line_class(1, 5))
    with pytest.raises(PreconditionError):
        cremona_curve(line_class(1, 2))


def test_cremona_minus_one_examples():
    """Test the three canonical cases and an involution check."""
    assert cremona_minus_one(MinusOneCurveId(a=0, b=1, c=2), (1, 2, 3, 4)).key == (0, 3, 4)
    assert cremona_minus_one(MinusOneCurveId(a=0, b=1, c=2), (3, 4, 5, 6)).key == (1, 7, 8)
    assert cremona_minus_one(MinusOneCurveId(a=1, b=7, c=8), (3, 4, 5, 6)).key == (0, 1, 2)
    assert cremona_minus_one(MinusOneCurveId(a=3, b=1, c=2), (2, 3, 4, 5)).key == (3, 1, 2)


def test_cremona_minus_one_parity_table():
    """Test the level shifts for odd and even a > 0."""
    odd = MinusOneCurveId(a=3, b=1, c=2)
    assert cremona_minus_one(odd, (1, 2, 3, 4)).key == (4, 3, 4)
    assert cremona_minus_one(odd, (3, 4, 5, 6)).key == (2, 7, 8)
    even = MinusOneCurveId(a=2, b=1, c=2)
    assert cremona_minus_one(even, (1, 2, 3, 4)).key == (1, 3, 4)
    assert cremona_minus_one(even, (3, 4, 5, 6)).key == (3, 7, 8)


def test_sort_descending():
    """Test the stable sort and its permutation."""
    divisor = make_divisor(6, [4, 1, 0, -2, 6, 3, 3, 2])
    ordered, perm = sort_descending(divisor)
    assert ordered == make_divisor(6, [6, 4, 3, 3, 2, 1, 0, -2])
    assert perm == (5, 1, 6, 7, 8, 2, 3, 4)
    assert undo_permutation(ordered, perm) == divisor
    assert apply_permutation(divisor, perm) == ordered

    identity = tuple(range(1, 9))
    assert sort_descending(make_divisor(5, [4, 3, 3, 3, 2, 1, 1, 1]))[1] == identity
    assert sort_descending(make_divisor(2, [1] * 8))[1] == identity


def test_divisor_involution_and_k_invariance():
    """Test Cr o Cr = id and K(Cr L) = K(L) for random classes and bases."""
    rng = random.Random(1)
    for _ in range(1000):
        divisor = random_divisor(rng)
        basis = rng.choice(ALL_BASES)
        image = cremona_divisor(divisor, basis)
        assert cremona_divisor(image, basis) == divisor
        assert anticanonical_degree(image) == anticanonical_degree(divisor)


def test_curve_involution():
    """Test Cr o Cr = id on random non-edge curve classes."""
    rng = random.Random(2)
    for _ in range(500):
        curve = make_curve(rng.randint(2, 15), [rng.randint(0, 5) for _ in range(8)])
        basis = rng.choice(ALL_BASES)
        assert cremona_curve(cremona_curve(curve, basis), basis) == curve


def test_minus_one_involution():
    """Test that cremona_minus_one is an involution for every basis, a <= 3."""
    for curve_id in iter_minus_one_ids(3):
        for basis in ALL_BASES:
            image = cremona_minus_one(curve_id, basis)
            assert cremona_minus_one(image, basis) == curve_id


def test_minus_one_matches_curve_formula_off_edges():
    """Test the case table against the skew formula and the edge rule."""
    for curve_id in iter_minus_one_ids(3):
        curve = minus_one_curve(curve_id)
        for basis in ALL_BASES:
            image = cremona_minus_one(curve_id, basis)
            if curve_id.a == 0 and set(curve_id.pair) <= set(basis):
                u, v = [i for i in basis if i not in curve_id.pair]
                assert image.key == (0, u, v)
            else:
                assert minus_one_curve(image) == cremona_curve(curve, basis)


def test_pairing_invariance():
    """Test Cr(L).Cr(C) = L.C for random L and every non-edge C_a^{b,c}, a <= 3."""
    rng = random.Random(4)
    for _ in range(40):
        divisor = random_divisor(rng)
        basis = rng.choice(ALL_BASES)
        image = cremona_divisor(divisor, basis)
        assert intersect(image, dq8_class()) == intersect(divisor, dq8_class())
        for curve_id in iter_minus_one_ids(3):
            if curve_id.a == 0 and set(curve_id.pair) <= set(basis):
                continue
            moved = minus_one_curve(cremona_minus_one(curve_id, basis))
            assert intersect(image, moved) == intersect(divisor, minus_one_curve(curve_id))


def test_edge_pairing_changes_sign():
    """Test that an edge and its flopped partner pair with opposite signs."""
    divisor = make_divisor(5, [4, 3, 3, 3, 2, 1, 1, 1])
    image = cremona_divisor(divisor)
    assert intersect(divisor, line_class(1, 2)) == -intersect(image, line_class(3, 4))


def test_minus_one_orbit_is_the_set_of_curves():
    """Test that the orbit of the lines is exactly {C_a^{b,c} : a <= 3}."""
    expected = {minus_one_curve(curve_id) for curve_id in iter_minus_one_ids(3)}
    assert minus_one_orbit(3) == expected


def test_lowering_word():
    """Test that the word carries C_a^{b,c} down to a line, one level per step."""
    for curve_id in iter_minus_one_ids(6):
        word, line = lowering_word(curve_id)
        assert len(word) == curve_id.a
        assert line.a == 0
        current = curve_id
        for basis in word:
            current = cremona_minus_one(current, basis)
        assert current == line
