"""
Lattice arithmetic on X = Bl_{P_1..P_8} P^3.

Divisor classes dH - sum m_i E_i pair with curve classes delta*h - sum mu_i e_i
by L.C = d*delta - sum m_i*mu_i. This module holds that pairing, the
distinguished classes (lines, the (-1)-curves C_a^{b,c}, D_Q8, the quadric
classes S_i) and the standard-form test with its decomposition.
"""

from itertools import combinations
from typing import Dict, Iterator, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import PreconditionError, TooManyPointsError
from ..models.classes import NUM_POINTS, CurveClass, DivisorClass, MinusOneCurveId

POINT_LABELS = tuple(range(1, NUM_POINTS + 1))
PAIRS: Tuple[Tuple[int, int], ...] = tuple(combinations(POINT_LABELS, 2))


class StandardDecomposition(BaseModel):
    """L = S + sum_{i=4}^{8} c_i S_i for a class L in standard form."""

    model_config = ConfigDict(frozen=True)

    base: DivisorClass = Field(..., description="S = L3(d-2m_4; m_1-m_4, m_2-m_4, m_3-m_4)")
    coefficients: Dict[int, int] = Field(..., description="c_i for i = 4..8")


def _pad(values: Sequence[int]) -> Tuple[int, ...]:
    values = [int(v) for v in values]
    if len(values) > NUM_POINTS:
        raise TooManyPointsError(
            f"too many points: {len(values)} multiplicities given, "
            f"at most {NUM_POINTS} supported"
        )
    return tuple(values) + (0,) * (NUM_POINTS - len(values))


def make_divisor(d: int, mults: Sequence[int] = ()) -> DivisorClass:
    """Build L3(d; mults) padded with zeros to 8 points."""
    return DivisorClass(degree=int(d), mults=_pad(mults))


def make_curve(delta: int, mults: Sequence[int] = ()) -> CurveClass:
    """Build l3(delta; mults) padded with zeros to 8 points."""
    return CurveClass(degree=int(delta), mults=_pad(mults))


def intersect(divisor: DivisorClass, curve: CurveClass) -> int:
    """L.C = d*delta - sum m_i mu_i."""
    return divisor.degree * curve.degree - sum(
        m * mu for m, mu in zip(divisor.mults, curve.mults)
    )


def line_class(i: int, j: int) -> CurveClass:
    """l_{i,j}, the strict transform of the line through P_i and P_j."""
    if i == j:
        raise PreconditionError("a line needs two distinct points")
    return make_curve(1, [1 if k in (i, j) else 0 for k in POINT_LABELS])


def dq8_class() -> CurveClass:
    """D_Q8 = l3(4; 1^8), the base curve of the pencil of quadrics through all 8 points."""
    return make_curve(4, [1] * NUM_POINTS)


def exceptional_class(i: int) -> DivisorClass:
    """E_i, written as L3(0; ..., -1 at slot i, ...)."""
    return make_divisor(0, [-1 if k == i else 0 for k in POINT_LABELS])


def quadric_class(i: int) -> DivisorClass:
    """S_i = L3(2; 1^i)."""
    if not 0 <= i <= NUM_POINTS:
        raise PreconditionError(f"S_i needs 0 <= i <= {NUM_POINTS}, got {i}")
    return make_divisor(2, [1] * i)


def minus_one_curve(curve_id: MinusOneCurveId) -> CurveClass:
    """
    Expand C_a^{b,c}.

    Degree 2a+1; for even a, mu_i = a/2 + [i in {b,c}];
    for odd a, mu_i = (a+1)/2 - [i in {b,c}].
    """
    a, pair = curve_id.a, curve_id.pair
    if a % 2 == 0:
        mults = [a // 2 + (1 if i in pair else 0) for i in POINT_LABELS]
    else:
        mults = [(a + 1) // 2 - (1 if i in pair else 0) for i in POINT_LABELS]
    return make_curve(2 * a + 1, mults)


def identify_minus_one(curve: CurveClass) -> Optional[MinusOneCurveId]:
    """Return the id (a, b, c) with minus_one_curve(id) == curve, or None."""
    if curve.degree < 1 or curve.degree % 2 == 0:
        return None
    a = (curve.degree - 1) // 2
    base = a // 2 if a % 2 == 0 else (a + 1) // 2
    sign = 1 if a % 2 == 0 else -1
    marked = [i for i in POINT_LABELS if curve.mult(i) == base + sign]
    if len(marked) != 2:
        return None
    if any(curve.mult(i) != base for i in POINT_LABELS if i not in marked):
        return None
    return MinusOneCurveId(a=a, b=marked[0], c=marked[1])


def iter_minus_one_ids(max_level: int) -> Iterator[MinusOneCurveId]:
    """All ids with 0 <= a <= max_level, in (a, b, c) order."""
    for a in range(max_level + 1):
        for b, c in PAIRS:
            yield MinusOneCurveId(a=a, b=b, c=c)


def minus_one_excess(divisor: DivisorClass, curve_id: MinusOneCurveId) -> int:
    """t_a^{b,c} = -L.C_a^{b,c}."""
    return -intersect(divisor, minus_one_curve(curve_id))


def anticanonical_degree(divisor: DivisorClass) -> int:
    """K = 4d - sum m_i, which equals L.D_Q8."""
    return 4 * divisor.degree - sum(divisor.mults)


def pair_excess(divisor: DivisorClass, i: int, j: int) -> int:
    """t_{i,j} = m_i + m_j - d."""
    if i == j:
        raise PreconditionError(f"pair_excess needs two distinct indices, got {i} twice")
    return divisor.mult(i) + divisor.mult(j) - divisor.degree


def is_sorted(divisor: DivisorClass) -> bool:
    return all(a >= b for a, b in zip(divisor.mults, divisor.mults[1:]))


def is_standard_form(divisor: DivisorClass) -> bool:
    """m_1 >= ... >= m_8 >= 0 and 2d >= m_1 + m_2 + m_3 + m_4."""
    return (
        is_sorted(divisor)
        and divisor.mults[-1] >= 0
        and 2 * divisor.degree >= sum(divisor.mults[:4])
    )


def decompose_standard(divisor: DivisorClass) -> StandardDecomposition:
    """Write a standard-form class as S + sum_{i=4}^{8} c_i S_i."""
    if not is_standard_form(divisor):
        raise PreconditionError(f"{divisor} is not in standard form")
    m = divisor.mults
    m4 = m[3]
    base = make_divisor(divisor.degree - 2 * m4, [m[0] - m4, m[1] - m4, m[2] - m4])
    coefficients = {i: m[i - 1] - m[i] for i in range(4, NUM_POINTS)}
    coefficients[NUM_POINTS] = m[NUM_POINTS - 1]
    return StandardDecomposition(base=base, coefficients=coefficients)


def recompose_standard(decomposition: StandardDecomposition) -> DivisorClass:
    """Inverse of decompose_standard."""
    total = decomposition.base
    for i, c in decomposition.coefficients.items():
        total = total + quadric_class(i) * c
    return total
