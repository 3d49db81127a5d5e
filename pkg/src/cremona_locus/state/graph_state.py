"""LangGraph state for the verification workflow."""

from typing import Annotated, List, Optional, TypedDict
import operator

from ..models.classes import DivisorClass
from ..models.oracle import KernelBasis, PointConfiguration
from ..models.report import BaseLocusResult
from ..models.state import CheckName, CheckResult


class VerifyState(TypedDict):
    """State for the verification workflow.

    The pipeline node fills in the base locus, the point configuration and
    the kernel basis; the check nodes run in parallel and only append to
    `checks`.
    """

    # Input
    system: DivisorClass
    prime: int
    seed: int
    echo: bool  # print banners and the summary table

    # Pipeline outputs
    locus: Optional[BaseLocusResult]
    configuration: Optional[PointConfiguration]
    kernel: Optional[KernelBasis]
    pipeline_status: str  # pending, success, empty, error

    # Check outputs (appended by the parallel checks)
    checks: Annotated[List[CheckResult], operator.add]

    # Workflow control
    current_check: CheckName
    verification_complete: bool
    passed: bool
    error: Optional[str]
