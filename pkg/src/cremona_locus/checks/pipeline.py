"""Pipeline node - computes everything the checks compare against."""

from typing import Any, Dict

from ..core.baselocus import base_locus
from ..exceptions import EmptySystemError, OracleError, PreconditionError
from ..models.state import CheckName, CheckResult, CheckStatus
from ..services.oracle import divisor_kernel, make_configuration
from ..state import VerifyState


def pipeline_node(state: VerifyState) -> Dict[str, Any]:
    """
    Run the exact pipeline and build the oracle inputs.

    Args:
        state: Current graph state

    Returns:
        Updated state dictionary with the base locus, configuration and kernel
    """
    system = state["system"]
    if state.get("echo", True):
        print("=" * 60)
        print("🔬 VERIFICATION PIPELINE")
        print("=" * 60)
        print(f"System: {system}")
        print(f"Seed: {state['seed']}  Prime: {state['prime']}")
        print()

    try:
        locus = base_locus(system)
    except EmptySystemError as exc:
        return {
            "pipeline_status": "empty",
            "current_check": CheckName.PIPELINE,
            "error": str(exc),
            "checks": [
                CheckResult(name=CheckName.PIPELINE, status=CheckStatus.FAIL, detail=str(exc))
            ],
        }

    try:
        configuration = make_configuration(state["prime"], state["seed"])
        kernel = divisor_kernel(system, configuration)
    except (OracleError, PreconditionError) as exc:
        return {
            "locus": locus,
            "pipeline_status": "error",
            "current_check": CheckName.PIPELINE,
            "error": str(exc),
            "checks": [
                CheckResult(name=CheckName.PIPELINE, status=CheckStatus.ERROR, detail=str(exc))
            ],
        }

    return {
        "locus": locus,
        "configuration": configuration,
        "kernel": kernel,
        "pipeline_status": "success",
        "current_check": CheckName.PIPELINE,
        "checks": [
            CheckResult(
                name=CheckName.PIPELINE,
                status=CheckStatus.PASS,
                detail=f"base locus computed; oracle kernel has dimension {kernel.dimension}",
            )
        ],
    }
