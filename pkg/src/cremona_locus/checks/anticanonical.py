"""Anticanonical check - points of D_Q8 lie on every member."""

from ..models.state import CheckName, CheckResult
from ..services.oracle import anticanonical_curve_points, vanishes_at
from ..state import VerifyState
from .base import check_node, skipped, verdict

SAMPLE_POINTS = 6


@check_node(CheckName.ANTICANONICAL)
def anticanonical_check(state: VerifyState) -> CheckResult:
    locus = state["locus"]
    if locus.dq8_mult == 0:
        return skipped(CheckName.ANTICANONICAL, "D_Q8 is not in the base locus")
    points = anticanonical_curve_points(state["configuration"], limit=SAMPLE_POINTS)
    contained = sum(1 for point in points if vanishes_at(state["kernel"], point))
    return verdict(
        CheckName.ANTICANONICAL,
        bool(points) and contained == len(points),
        f"{contained}/{len(points)} sampled points of D_Q8 on every member",
    )
