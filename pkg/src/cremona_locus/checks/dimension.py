"""Dimension check - h^0 from the reduction against the interpolation rank."""

from ..core.reduction import dimension
from ..models.state import CheckName, CheckResult
from ..state import VerifyState
from .base import check_node, verdict


@check_node(CheckName.DIMENSION)
def dimension_check(state: VerifyState) -> CheckResult:
    expected = dimension(state["system"])
    found = state["kernel"].dimension
    return verdict(
        CheckName.DIMENSION,
        expected == found,
        f"h0 by reduction {expected}, by interpolation {found}",
        expected=expected,
        found=found,
    )
