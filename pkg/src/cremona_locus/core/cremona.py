"""
The cubic Cremona transformation acting on classes of X.

A transformation is based at four of the points (the basis B). On divisors
it shifts the degree and the four basis multiplicities by
k = 2d - sum_{i in B} m_i; on curves skew to the six edge lines of B it
shifts them by h = delta - sum_{i in B} mu_i. Edge lines are flopped onto
the opposite edge.
"""

import logging
from collections import deque
from itertools import combinations
from typing import Dict, Iterable, List, Set, Tuple

from ..exceptions import PreconditionError
from ..models.classes import NUM_POINTS, CurveClass, DivisorClass, MinusOneCurveId
from ..models.trace import CremonaStep
from .lattice import POINT_LABELS, dq8_class, identify_minus_one, line_class

logger = logging.getLogger(__name__)

DEFAULT_BASIS: Tuple[int, int, int, int] = (1, 2, 3, 4)

# Ground truth for the action on C_a^{1,2}: one basis per overlap size
# |{1,2} & B|, and the image (level, pair) it produces.
_CANONICAL_BASES: Dict[int, Tuple[int, ...]] = {
    2: (1, 2, 3, 4),
    1: (2, 3, 4, 5),
    0: (3, 4, 5, 6),
}


def check_basis(basis: Iterable[int]) -> Tuple[int, int, int, int]:
    """Validate and sort a basis of four distinct labels."""
    values = tuple(sorted(int(i) for i in basis))
    if len(values) != 4 or len(set(values)) != 4:
        raise PreconditionError(f"a Cremona basis needs 4 distinct indices, got {values}")
    if any(not 1 <= i <= NUM_POINTS for i in values):
        raise PreconditionError(f"basis indices must lie in 1..{NUM_POINTS}: {values}")
    return values


def cremona_divisor(
    divisor: DivisorClass, basis: Iterable[int] = DEFAULT_BASIS
) -> DivisorClass:
    """L3(d; m) -> L3(d+k; m_i + k for i in B, m_i otherwise)."""
    basis = check_basis(basis)
    k = 2 * divisor.degree - sum(divisor.mult(i) for i in basis)
    return divisor.with_mults(
        divisor.degree + k, {i: divisor.mult(i) + k for i in basis}
    )


def is_edge_class(curve: CurveClass, basis: Iterable[int] = DEFAULT_BASIS) -> bool:
    """True for l_{i,j} with both i and j in the basis."""
    basis = check_basis(basis)
    curve_id = identify_minus_one(curve)
    return (
        curve_id is not None
        and curve_id.a == 0
        and curve_id.b in basis
        and curve_id.c in basis
    )


def cremona_curve(curve: CurveClass, basis: Iterable[int] = DEFAULT_BASIS) -> CurveClass:
    """
    l3(delta; mu) -> l3(delta + 2h; mu_i + h for i in B, mu_i otherwise).

    Only valid for curves skew to the edges of B. Edge lines are rejected;
    other classes are accepted with their skewness unverified.
    """
    basis = check_basis(basis)
    if is_edge_class(curve, basis):
        raise PreconditionError(
            f"{curve} is an edge of the basis {basis}; use cremona_minus_one"
        )
    if identify_minus_one(curve) is None and curve != dq8_class():
        logger.warning("unverified skewness: %s under basis %s", curve, basis)
    h = curve.degree - sum(curve.mult(i) for i in basis)
    return curve.with_mults(curve.degree + 2 * h, {i: curve.mult(i) + h for i in basis})


def _canonical_image(a: int, overlap: int) -> Tuple[int, Tuple[int, int]]:
    if overlap == 2:
        if a == 0:
            return 0, (3, 4)
        return (a + 1, (3, 4)) if a % 2 == 1 else (a - 1, (3, 4))
    if overlap == 1:
        return a, (1, 2)
    return (a - 1, (7, 8)) if a % 2 == 1 else (a + 1, (7, 8))


def _relabeling(
    curve_id: MinusOneCurveId, basis: Tuple[int, ...], overlap: int
) -> Dict[int, int]:
    """A permutation sending (pair, basis) onto the canonical case for `overlap`."""
    canonical_basis = _CANONICAL_BASES[overlap]
    b, c = curve_id.pair
    if overlap == 1 and b in basis:
        b, c = c, b  # the pair member inside B must land on label 2
    sigma = {b: 1, c: 2}
    rest_of_basis = [i for i in basis if i not in sigma]
    free_canonical = [i for i in canonical_basis if i not in (1, 2)]
    sigma.update(zip(rest_of_basis, free_canonical))
    others = [i for i in POINT_LABELS if i not in sigma]
    targets = [i for i in POINT_LABELS if i not in sigma.values()]
    sigma.update(zip(others, targets))
    return sigma


def cremona_minus_one(
    curve_id: MinusOneCurveId, basis: Iterable[int] = DEFAULT_BASIS
) -> MinusOneCurveId:
    """Image of C_a^{b,c} under the transformation based at B."""
    basis = check_basis(basis)
    overlap = len(set(curve_id.pair) & set(basis))
    sigma = _relabeling(curve_id, basis, overlap)
    inverse = {v: k for k, v in sigma.items()}
    level, (u, v) = _canonical_image(curve_id.a, overlap)
    return MinusOneCurveId.of(level, inverse[u], inverse[v])


def sort_descending(divisor: DivisorClass) -> Tuple[DivisorClass, Tuple[int, ...]]:
    """
    Stable sort of the multiplicities, largest first.

    Returns the sorted class and the permutation: entry s is the original
    label now sitting in slot s+1.
    """
    order = sorted(POINT_LABELS, key=lambda i: -divisor.mult(i))
    perm = tuple(order)
    return apply_permutation(divisor, perm), perm


def apply_permutation(divisor: DivisorClass, perm: Tuple[int, ...]) -> DivisorClass:
    """Renumber: slot s of the result holds the point labelled perm[s-1]."""
    return type(divisor)(degree=divisor.degree, mults=tuple(divisor.mult(i) for i in perm))


def undo_permutation(divisor: DivisorClass, perm: Tuple[int, ...]) -> DivisorClass:
    """Inverse of apply_permutation."""
    mults = [0] * NUM_POINTS
    for slot, label in enumerate(perm):
        mults[label - 1] = divisor.mults[slot]
    return type(divisor)(degree=divisor.degree, mults=tuple(mults))


def apply_step(divisor: DivisorClass, step: CremonaStep) -> DivisorClass:
    """Apply a recorded step to a class written in original labels."""
    return cremona_divisor(divisor, step.basis)


def lowering_word(curve_id: MinusOneCurveId) -> Tuple[List[Tuple[int, ...]], MinusOneCurveId]:
    """
    Bases that carry C_a^{b,c} down one level at a time to a line.

    Returns (word, line_id); applying cremona_minus_one along `word` maps
    curve_id to line_id. The last basis never contains the final pair.
    """
    word: List[Tuple[int, ...]] = []
    current = curve_id
    while current.a > 0:
        others = [i for i in POINT_LABELS if i not in current.pair]
        if current.a % 2 == 1:
            basis = check_basis(others[:4])
        else:
            basis = check_basis(list(current.pair) + others[:2])
        word.append(basis)
        current = cremona_minus_one(current, basis)
    return word, current


def minus_one_orbit(max_level: int) -> Set[CurveClass]:
    """
    Cremona orbit of the lines l_{i,j}, cut off above degree 2*max_level+1.

    Curve classes are moved with the skew formula, edges with the flop rule.
    """
    max_degree = 2 * max_level + 1
    bases = [check_basis(b) for b in combinations(POINT_LABELS, 4)]
    start = {line_class(i, j) for i in POINT_LABELS for j in POINT_LABELS if i < j}
    seen: Set[CurveClass] = set(start)
    queue = deque(start)
    while queue:
        curve = queue.popleft()
        for basis in bases:
            if is_edge_class(curve, basis):
                curve_id = identify_minus_one(curve)
                u, v = [i for i in basis if i not in curve_id.pair]
                image = line_class(u, v)
            else:
                h = curve.degree - sum(curve.mult(i) for i in basis)
                image = curve.with_mults(
                    curve.degree + 2 * h, {i: curve.mult(i) + h for i in basis}
                )
            if image.degree <= max_degree and image not in seen:
                seen.add(image)
                queue.append(image)
    return seen

