"""Shared plumbing for the verification check nodes."""

import logging
from functools import wraps
from typing import Any, Callable, Dict

from ..exceptions import OracleError, PreconditionError
from ..models.state import CheckName, CheckResult, CheckStatus
from ..state import VerifyState

logger = logging.getLogger(__name__)

CheckFunction = Callable[[VerifyState], CheckResult]
CheckNode = Callable[[VerifyState], Dict[str, Any]]


def verdict(name: CheckName, ok: bool, detail: str, **data: Any) -> CheckResult:
    status = CheckStatus.PASS if ok else CheckStatus.FAIL
    return CheckResult(name=name, status=status, detail=detail, data=data)


def skipped(name: CheckName, detail: str) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.SKIPPED, detail=detail)


def check_node(name: CheckName) -> Callable[[CheckFunction], CheckNode]:
    """
    Turn a function returning a CheckResult into a graph node.

    The node only appends to `checks`, so several of them can run in the same
    step. Oracle failures become ERROR results; anything else propagates.
    """

    def decorator(run: CheckFunction) -> CheckNode:
        @wraps(run)
        def node(state: VerifyState) -> Dict[str, Any]:
            try:
                result = run(state)
            except (OracleError, PreconditionError) as exc:
                logger.warning("%s check raised: %s", name.value, exc)
                result = CheckResult(name=name, status=CheckStatus.ERROR, detail=str(exc))
            logger.debug("%s check: %s (%s)", name.value, result.status.value, result.detail)
            return {"checks": [result]}

        return node

    return decorator
