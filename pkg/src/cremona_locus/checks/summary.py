"""Summary node - orders the check results and prints the transcript."""

from typing import Any, Dict

from ..models.state import CheckName, CheckStatus
from ..state import VerifyState

_ORDER = {name: n for n, name in enumerate(CheckName)}


def summary_node(state: VerifyState) -> Dict[str, Any]:
    """
    Collect the results of the parallel checks.

    Args:
        state: Current graph state

    Returns:
        Updated state dictionary with the overall verdict
    """
    checks = sorted(state.get("checks", []), key=lambda check: _ORDER[check.name])
    passed = state.get("pipeline_status") == "success" and not any(c.failed for c in checks)

    if state.get("echo", True):
        print("=" * 60)
        print("📋 VERIFICATION SUMMARY")
        print("=" * 60)
        for check in checks:
            print(f"  [{check.status.value.upper():7}] {check.name.value:13} {check.detail}")
        print()
        print(f"Seed: {state['seed']}  Prime: {state['prime']}")
        print("✅ All checks passed" if passed else "❌ Verification failed")
        print()

    return {
        "current_check": CheckName.SUMMARY,
        "verification_complete": True,
        "passed": passed,
    }


def count_by_status(state: VerifyState) -> Dict[str, int]:
    counts = {status.value: 0 for status in CheckStatus}
    for check in state.get("checks", []):
        counts[check.status.value] += 1
    return counts
