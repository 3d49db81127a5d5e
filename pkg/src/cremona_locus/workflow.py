"""LangGraph workflow for the oracle verification battery."""

from typing import Any, Dict

from langgraph.graph import END, StateGraph

from .checks import (
    anticanonical_check,
    curves_check,
    dimension_check,
    lines_check,
    pipeline_node,
    point_check,
    summary_node,
    transport_check,
)
from .checks.summary import count_by_status
from .models.classes import DivisorClass
from .models.state import CheckName
from .state import VerifyState
from .utils.config import get_settings

CHECK_NODES = {
    "dimension": dimension_check,
    "lines": lines_check,
    "point": point_check,
    "curves": curves_check,
    "anticanonical": anticanonical_check,
    "transport": transport_check,
}


def create_workflow():
    """
    Creates the verification workflow.

    The workflow follows this sequence:
    1. Pipeline: base locus, point configuration and kernel basis
    2. Checks (Parallel): dimension, lines, point, curves, anticanonical, transport
    3. Summary: orders the results and decides pass/fail

    Returns:
        Compiled StateGraph ready for execution
    """
    workflow = StateGraph(VerifyState)

    workflow.add_node("pipeline", pipeline_node)
    for name, node in CHECK_NODES.items():
        workflow.add_node(name, node)
    workflow.add_node("summary", summary_node)

    workflow.set_entry_point("pipeline")

    def route_after_pipeline(state: VerifyState):
        if state["pipeline_status"] == "success":
            return list(CHECK_NODES)
        return "summary"

    routes = {name: name for name in CHECK_NODES}
    routes["summary"] = "summary"
    workflow.add_conditional_edges("pipeline", route_after_pipeline, routes)

    # Checks -> Summary
    for name in CHECK_NODES:
        workflow.add_edge(name, "summary")

    workflow.add_edge("summary", END)

    return workflow.compile()


def log_state_update(state: Dict[str, Any]) -> None:
    """Print state updates when LOG_WORKFLOW_STATE=true."""
    if not get_settings().log_workflow_state:
        return
    if state.get("current_check") == CheckName.PIPELINE:
        print(f"📋 [State Update] Pipeline finished: {state.get('pipeline_status')}")
    if state.get("current_check") == CheckName.SUMMARY:
        counts = ", ".join(f"{k}={v}" for k, v in count_by_status(state).items())
        print(f"📋 [State Update] Summary finished: {counts}")


def run_verification(system: DivisorClass, prime: int, seed: int, echo: bool = True) -> dict:
    """
    Execute the verification workflow for one system.

    Args:
        system: The linear system to verify
        prime: Prime of the oracle field
        seed: Seed of the point configuration
        echo: Print banners and the summary table

    Returns:
        Final state after workflow completion
    """
    initial_state = {
        "system": system,
        "prime": prime,
        "seed": seed,
        "echo": echo,
        "locus": None,
        "configuration": None,
        "kernel": None,
        "pipeline_status": "pending",
        "checks": [],
        "current_check": CheckName.NONE,
        "verification_complete": False,
        "passed": False,
        "error": None,
    }

    app = create_workflow()

    final_state = initial_state
    for step_state in app.stream(initial_state, stream_mode="values"):
        final_state = step_state
        log_state_update(step_state)

    return final_state
