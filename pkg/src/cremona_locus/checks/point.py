"""Point check - the isolated base point in coordinates."""

from ..core.reduction import reduce_to_standard
from ..models.state import CheckName, CheckResult
from ..services.oracle import isolated_point, lies_on_anticanonical_curve, vanishes_at
from ..state import VerifyState
from .base import check_node, skipped, verdict


@check_node(CheckName.POINT)
def point_check(state: VerifyState) -> CheckResult:
    locus = state["locus"]
    if locus.point is None:
        return skipped(CheckName.POINT, "no isolated base point")
    cfg = state["configuration"]
    trace = reduce_to_standard(locus.residual).trace
    point = isolated_point(locus.point, trace, cfg)
    on_system = vanishes_at(state["kernel"], point)
    on_curve = lies_on_anticanonical_curve(cfg, point)
    seven = ",".join(str(i) for i in locus.point.seven)
    return verdict(
        CheckName.POINT,
        on_system and on_curve,
        f"point of multiplicity {locus.point.mult} for ({seven}) after {len(trace)} steps: "
        f"on every member {on_system}, on D_Q8 {on_curve}",
        point=list(point),
    )
