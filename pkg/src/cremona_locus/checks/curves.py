"""Curve check - sampled points of each base curve lie on every member."""

from ..models.state import CheckName, CheckResult
from ..services.oracle import curve_membership_check
from ..state import VerifyState
from .base import check_node, skipped, verdict

MAX_CHECKED_LEVEL = 2


@check_node(CheckName.CURVES)
def curves_check(state: VerifyState) -> CheckResult:
    locus = state["locus"]
    if not locus.curves:
        return skipped(CheckName.CURVES, "no base curves")
    tested, missing, too_high = 0, [], 0
    for curve in locus.curves:
        if curve.id.a > MAX_CHECKED_LEVEL:
            too_high += 1
            continue
        tested += 1
        if not curve_membership_check(
            state["system"], curve.id, state["configuration"], kernel=state["kernel"]
        ):
            missing.append(str(curve.id))
    if tested == 0:
        return skipped(CheckName.CURVES, f"all {too_high} base curves have a > {MAX_CHECKED_LEVEL}")
    detail = f"{tested} curves contained"
    if too_high:
        detail += f", {too_high} with a > {MAX_CHECKED_LEVEL} not checked"
    if missing:
        detail = "not contained: " + ", ".join(missing)
    return verdict(CheckName.CURVES, not missing, detail, missing=missing)
