"""Transport check - base curves carried back from the standard form."""

from ..core.baselocus import transport_cross_check
from ..models.state import CheckName, CheckResult
from ..state import VerifyState
from .base import check_node, verdict


@check_node(CheckName.TRANSPORT)
def transport_check(state: VerifyState) -> CheckResult:
    residual = state["locus"].residual
    ok = transport_cross_check(residual)
    return verdict(
        CheckName.TRANSPORT,
        ok,
        f"transported lines of {residual} {'match' if ok else 'differ from'} the enumeration",
    )
