"""
Cremona reduction to standard form, fixed components and dimension.

reduce_to_standard repeatedly sorts the multiplicities and, while
2d < m_1 + m_2 + m_3 + m_4, applies the cubic Cremona transformation to the
four largest. Every applied step has k < 0, so the degree strictly drops
and the loop stops after at most d + 1 steps. Negative multiplicities left
at the end are fixed exceptional divisors; carrying them back through the
trace gives the fixed components of the input.
"""

import logging
from math import comb
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..exceptions import EmptySystemError, InconsistencyError, PreconditionError
from ..models.classes import DivisorClass
from ..models.trace import (
    CremonaStep,
    FixedComponent,
    FixedPart,
    ReductionResult,
    ReductionTrace,
    StrippedDivisor,
)
from .cremona import apply_step, cremona_divisor, sort_descending
from .lattice import PAIRS, exceptional_class, is_standard_form, pair_excess

logger = logging.getLogger(__name__)


class DiagramRow(BaseModel):
    """One row of a reduction diagram, in original point labels."""

    model_config = ConfigDict(frozen=True)

    divisor: DivisorClass
    boxed: Tuple[int, ...] = Field(default_factory=tuple, description="Basis of the next step")


def reduce_to_standard(divisor: DivisorClass) -> ReductionResult:
    """
    Reduce a class to standard form.

    The end class satisfies 2d >= m_1 + m_2 + m_3 + m_4 after sorting; it may
    still carry negative multiplicities. If the degree drops below zero the
    system is empty and the loop stops there.
    """
    current = divisor
    steps: List[CremonaStep] = []
    max_steps = max(divisor.degree, 0) + 1

    while True:
        ordered, perm = sort_descending(current)
        if current.degree < 0:
            logger.debug("degree of %s dropped below 0: empty system", current)
            break
        if 2 * ordered.degree >= sum(ordered.mults[:4]):
            break
        if len(steps) >= max_steps:
            raise InconsistencyError(
                f"reduction of {divisor} did not terminate after {max_steps} steps"
            )
        step = CremonaStep(perm=perm)
        steps.append(step)
        current = apply_step(current, step)
        logger.debug("Cremona on %s -> %s", step.basis, current)

    stripped = tuple(
        StrippedDivisor(slot=slot, label=label, mult=-ordered.mult(slot))
        for slot, label in enumerate(perm, start=1)
        if ordered.mult(slot) < 0
    )
    return ReductionResult(
        source=divisor,
        standard=ordered,
        end_class=current,
        labels=perm,
        trace=ReductionTrace(steps=tuple(steps)),
        stripped=stripped,
        empty=current.degree < 0,
    )


def transport_divisor_forward(divisor: DivisorClass, trace: ReductionTrace) -> DivisorClass:
    """Replay the trace on a class written in original labels."""
    for step in trace.steps:
        divisor = apply_step(divisor, step)
    return divisor


def transport_divisor_back(divisor: DivisorClass, trace: ReductionTrace) -> DivisorClass:
    """Undo the trace: each step is an involution, applied in reverse order."""
    for step in reversed(trace.steps):
        divisor = cremona_divisor(divisor, step.basis)
    return divisor


def reduction_diagram(result: ReductionResult) -> List[DiagramRow]:
    """Rows of the reduction diagram; each row boxes the basis of the next step."""
    rows: List[DiagramRow] = []
    current = result.source
    for step in result.trace.steps:
        rows.append(DiagramRow(divisor=current, boxed=step.basis))
        current = apply_step(current, step)
    rows.append(DiagramRow(divisor=current))
    return rows


def _clamp(divisor: DivisorClass) -> DivisorClass:
    return DivisorClass(degree=divisor.degree, mults=tuple(max(m, 0) for m in divisor.mults))


def _movable_standard(divisor: DivisorClass) -> Optional[DivisorClass]:
    """
    Sorted standard class with the same sections, or None if the system is empty.

    Negative multiplicities are fixed exceptional divisors and carry no
    sections, so they are clamped to zero and the reduction resumed.
    """
    current = _clamp(divisor)
    while True:
        result = reduce_to_standard(current)
        if result.empty:
            return None
        if not result.stripped:
            return result.standard
        current = _clamp(result.standard)


def h1_standard(divisor: DivisorClass) -> int:
    """h^1 of a standard class: sum over t_{i,j} >= 2 of binom(t_{i,j} + 1, 3)."""
    if not is_standard_form(divisor) or divisor.degree < divisor.mult(1):
        raise PreconditionError(
            f"h1_standard needs a standard class with d >= m_1 >= 0, got {divisor}"
        )
    total = 0
    for i, j in PAIRS:
        t = pair_excess(divisor, i, j)
        if t >= 2:
            total += comb(t + 1, 3)
    return total


def expected_dimension(divisor: DivisorClass) -> int:
    """chi = binom(d+3, 3) - sum binom(m_i + 2, 3)."""
    return comb(divisor.degree + 3, 3) - sum(comb(m + 2, 3) for m in divisor.mults if m > 0)


def dimension(divisor: DivisorClass) -> int:
    """
    h^0 of the linear system as a vector space (0 means empty).

    Reduce to standard form, strip fixed exceptional divisors, and return
    chi + h^1 on the standard class; empty if the degree goes negative or
    a multiplicity exceeds the degree.
    """
    standard = _movable_standard(divisor)
    if standard is None or standard.mult(1) > standard.degree:
        return 0
    return expected_dimension(standard) + h1_standard(standard)


def is_empty(divisor: DivisorClass) -> bool:
    return dimension(divisor) == 0


def fixed_components(divisor: DivisorClass) -> Tuple[FixedPart, DivisorClass]:
    """
    Fixed part and residual of a non-empty system.

    Each negative end multiplicity m_i < 0 gives the fixed divisor -m_i E'_i;
    carrying E'_i back through the trace gives F_i with multiplicity -m_i.
    """
    if is_empty(divisor):
        raise EmptySystemError(f"{divisor} is empty")
    result = reduce_to_standard(divisor)
    items = []
    for stripped in sorted(result.stripped, key=lambda s: s.label):
        component = transport_divisor_back(exceptional_class(stripped.label), result.trace)
        if component.internal:
            raise InconsistencyError(
                f"fixed component {component} of {divisor} is not effective"
            )
        items.append(FixedComponent(divisor=component, mult=stripped.mult, label=stripped.label))

    fixed = FixedPart(items=tuple(items))
    residual = divisor - fixed.total()
    if residual.internal:
        raise InconsistencyError(f"residual {residual} of {divisor} has a negative entry")
    return fixed, residual
