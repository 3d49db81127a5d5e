"""
Base locus of a linear system on X.

The fixed part comes from the reduction (reduction.fixed_components). The
residual is either in standard form, where the four standard cases apply,
or it is not, in which case its base curves are the (-1)-curves
C_a^{b,c} with t_a^{b,c} = -L.C_a^{b,c} > 0, plus an isolated fat point
when 4d - sum m_i = 1.
"""

import logging
from collections import Counter
from itertools import combinations
from typing import Dict, List, Optional, Tuple

from ..exceptions import InconsistencyError, PreconditionError
from ..models.classes import NUM_POINTS, DivisorClass, MinusOneCurveId
from ..models.report import BaseCurve, BaseLocusResult, PointSpec, StandardCase
from .cremona import cremona_divisor, cremona_minus_one, sort_descending
from .lattice import (
    PAIRS,
    anticanonical_degree,
    is_standard_form,
    minus_one_excess,
    pair_excess,
)
from .reduction import dimension, fixed_components, reduce_to_standard

logger = logging.getLogger(__name__)


def _sorted_curves(curves: Dict[MinusOneCurveId, int]) -> Tuple[BaseCurve, ...]:
    return tuple(
        BaseCurve(id=curve_id, mult=mult)
        for curve_id, mult in sorted(curves.items(), key=lambda item: item[0].key)
        if mult > 0
    )


def is_standard_up_to_order(divisor: DivisorClass) -> bool:
    """Standard form after relabeling the points."""
    return is_standard_form(sort_descending(divisor)[0])


def _point_family_mult(ordered: DivisorClass) -> Optional[int]:
    """m if the sorted class is L3(2m; m^7, m-1) with m >= 1, else None."""
    m = ordered.mult(1)
    if m >= 1 and ordered.degree == 2 * m and ordered.mults == (m,) * 7 + (m - 1,):
        return m
    return None


def _anticanonical_family_mult(ordered: DivisorClass) -> Optional[int]:
    """m if the sorted class is L3(2m; m^8) with m >= 1, else None."""
    m = ordered.mult(1)
    if m >= 1 and ordered.degree == 2 * m and ordered.mults == (m,) * NUM_POINTS:
        return m
    return None


def classify_standard(divisor: DivisorClass) -> StandardCase:
    """Which of the four standard cases a (relabeled) standard class falls in."""
    ordered, _ = sort_descending(divisor)
    if not is_standard_form(ordered):
        raise PreconditionError(f"{divisor} is not in standard form")
    if _anticanonical_family_mult(ordered) is not None:
        return StandardCase.ANTICANONICAL_CURVE
    if _point_family_mult(ordered) is not None:
        return StandardCase.ISOLATED_POINT
    if ordered.degree < ordered.mult(1) + ordered.mult(2):
        return StandardCase.LINES
    return StandardCase.BASE_POINT_FREE


def standard_lines(divisor: DivisorClass) -> Dict[MinusOneCurveId, int]:
    """All lines l_{i,j} with t_{i,j} = m_i + m_j - d > 0."""
    lines: Dict[MinusOneCurveId, int] = {}
    for i, j in PAIRS:
        t = pair_excess(divisor, i, j)
        if t > 0:
            lines[MinusOneCurveId(a=0, b=i, c=j)] = t
    return lines


def _seven_points(divisor: DivisorClass, m: int) -> Tuple[int, ...]:
    ordered, perm = sort_descending(divisor)
    labels = [label for slot, label in enumerate(perm, start=1) if ordered.mult(slot) == m]
    return tuple(labels[:7])


def base_locus_standard(divisor: DivisorClass) -> BaseLocusResult:
    """
    Base locus of a non-empty class in standard form (up to relabeling).

    L3(2m; m^8) -> m D_Q8; L3(2m; m^7, m-1) -> mP; d < m_1 + m_2 -> the lines
    l_{i,j} with multiplicity t_{i,j} > 0; otherwise base point free.
    """
    case = classify_standard(divisor)
    if divisor.internal or dimension(divisor) == 0:
        raise PreconditionError(f"{divisor} must be a non-empty user-facing class")
    ordered, _ = sort_descending(divisor)

    result: Dict[str, object] = {"system": divisor, "residual": divisor, "standard_case": case}
    if case is StandardCase.ANTICANONICAL_CURVE:
        result["dq8_mult"] = _anticanonical_family_mult(ordered)
    elif case is StandardCase.ISOLATED_POINT:
        m = _point_family_mult(ordered)
        result["point"] = PointSpec(mult=m, seven=_seven_points(divisor, m))
    elif case is StandardCase.LINES:
        result["curves"] = _sorted_curves(standard_lines(divisor))
    return BaseLocusResult(**result)


def _enumeration_bound(divisor: DivisorClass) -> int:
    return 4 * max(divisor.degree, 1)


def enumerate_base_curves(divisor: DivisorClass) -> Tuple[BaseCurve, ...]:
    """
    All C_a^{b,c} with t_a^{b,c} > 0 on a fixed-component-free, non-standard class.

    K = 4d - sum m_i is Cremona invariant, standard classes have K >= 0 and
    K = 0 only for L3(2m; m^8), so here K >= 1 and t_a^{b,c} decreases
    linearly in a: every t is non-positive by a = 4d.
    """
    k_degree = anticanonical_degree(divisor)
    if k_degree <= 0:
        raise InconsistencyError(
            f"{divisor} is fixed-component free and not standard but has K = {k_degree}"
        )
    bound = _enumeration_bound(divisor)
    curves: Dict[MinusOneCurveId, int] = {}
    for a in range(bound + 2):
        for b, c in PAIRS:
            curve_id = MinusOneCurveId(a=a, b=b, c=c)
            t = minus_one_excess(divisor, curve_id)
            if t > 0:
                if a >= bound:
                    raise InconsistencyError(
                        f"t = {t} > 0 for {curve_id} beyond the enumeration bound"
                    )
                curves[curve_id] = t
    return _sorted_curves(curves)


def _isolated_point(residual: DivisorClass) -> Tuple[PointSpec, int]:
    """Reduce a K = 1 residual to L3(2m; m^7, m-1) and describe its point."""
    result = reduce_to_standard(residual)
    m = _point_family_mult(result.standard)
    if m is None or result.stripped:
        raise InconsistencyError(
            f"{residual} has K = 1 but reduces to {result.standard}, "
            "not to L3(2m; m^7, m-1)"
        )
    return PointSpec(mult=m, seven=result.labels[:7]), len(result.trace)


def base_locus(divisor: DivisorClass) -> BaseLocusResult:
    """
    Complete base locus: fixed part, base curves, m D_Q8 and the point mP.

    Raises EmptySystemError for empty systems.
    """
    fixed, residual = fixed_components(divisor)
    logger.debug(
        "fixed part of %s: %d components, residual %s",
        divisor,
        len(fixed.items),
        residual,
    )

    if is_standard_up_to_order(residual):
        standard = base_locus_standard(residual)
        return standard.model_copy(update={"system": divisor, "fixed": fixed})

    curves = enumerate_base_curves(residual)
    point: Optional[PointSpec] = None
    trace_len = len(reduce_to_standard(residual).trace)
    if anticanonical_degree(residual) == 1:
        point, trace_len = _isolated_point(residual)
    return BaseLocusResult(
        system=divisor,
        residual=residual,
        fixed=fixed,
        curves=curves,
        point=point,
        trace_len=trace_len,
    )


def _edge_lines(divisor: DivisorClass, basis: Tuple[int, ...]) -> Counter:
    """Edges l_{i,j} of the basis with t_{i,j} > 0 on `divisor`."""
    found: Counter = Counter()
    for i, j in combinations(basis, 2):
        t = pair_excess(divisor, i, j)
        if t > 0:
            found[MinusOneCurveId(a=0, b=i, c=j)] = t
    return found


def transported_base_curves(divisor: DivisorClass) -> Tuple[BaseCurve, ...]:
    """
    Base curves of a fixed-component-free class obtained from its standard form.

    Start from the lines of the standard end class and undo the reduction one
    step at a time. The six edge lines of a basis are flopped by the step, so
    edges are dropped before the step is undone and the edges with positive
    excess on the earlier class are added afterwards.
    """
    result = reduce_to_standard(divisor)
    if result.stripped or result.empty:
        raise PreconditionError(f"{divisor} has fixed components")

    classes: List[DivisorClass] = [divisor]
    for step in result.trace.steps:
        classes.append(cremona_divisor(classes[-1], step.basis))

    current: Counter = Counter(standard_lines(result.end_class))
    for index in range(len(result.trace.steps) - 1, -1, -1):
        basis = result.trace.steps[index].basis
        earlier: Counter = Counter()
        for curve_id, mult in current.items():
            if curve_id.a == 0 and curve_id.b in basis and curve_id.c in basis:
                continue
            earlier[cremona_minus_one(curve_id, basis)] += mult
        earlier.update(_edge_lines(classes[index], basis))
        current = earlier
    return _sorted_curves(dict(current))


def transport_cross_check(divisor: DivisorClass) -> bool:
    """True iff transporting the standard base lines back reproduces the enumeration."""
    transported = transported_base_curves(divisor)
    if is_standard_up_to_order(divisor):
        direct = _sorted_curves(standard_lines(divisor))
    else:
        direct = enumerate_base_curves(divisor)
    if transported != direct:
        logger.warning(
            "transport mismatch for %s: %s vs %s",
            divisor,
            [str(c.id) for c in transported],
            [str(c.id) for c in direct],
        )
    return transported == direct
