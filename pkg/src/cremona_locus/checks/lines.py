"""Line check - vanishing order along each l_{i,j} against t_{i,j}."""

from ..core.lattice import PAIRS, pair_excess
from ..models.state import CheckName, CheckResult
from ..services.oracle import line_vanishing_order
from ..state import VerifyState
from .base import check_node, verdict


@check_node(CheckName.LINES)
def lines_check(state: VerifyState) -> CheckResult:
    """
    Without fixed components the order along l_{i,j} is exactly
    max(0, t_{i,j}); fixed surfaces may add to it, so then it is a lower bound.
    """
    system, locus = state["system"], state["locus"]
    exact = locus.fixed.is_empty
    mismatches = []
    for i, j in PAIRS:
        expected = max(0, pair_excess(system, i, j))
        found = line_vanishing_order(state["kernel"], state["configuration"], i, j)
        if (found != expected) if exact else (found < expected):
            mismatches.append(f"l_{i},{j}: t={expected} order={found}")
    relation = "=" if exact else ">="
    detail = f"order {relation} max(0, t) on all 28 lines"
    if mismatches:
        detail = "; ".join(mismatches)
    return verdict(CheckName.LINES, not mismatches, detail, mismatches=mismatches)
