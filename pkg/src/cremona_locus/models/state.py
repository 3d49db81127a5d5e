"""State models for the verification workflow."""

from typing import Any, Dict
from enum import Enum
from pydantic import BaseModel, Field


class CheckName(str, Enum):
    """Enumeration of verification checks."""
    PIPELINE = "pipeline"
    DIMENSION = "dimension"
    LINES = "lines"
    POINT = "point"
    CURVES = "curves"
    ANTICANONICAL = "anticanonical"
    TRANSPORT = "transport"
    SUMMARY = "summary"
    NONE = "none"


class CheckStatus(str, Enum):
    """Outcome of a single check."""
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"
    ERROR = "error"


class CheckResult(BaseModel):
    """Output of one verification check."""

    name: CheckName = Field(..., description="Which check ran")
    status: CheckStatus = Field(..., description="pass / fail / skipped / error")
    detail: str = Field("", description="One-line human readable outcome")
    data: Dict[str, Any] = Field(default_factory=dict, description="Values compared")

    @property
    def failed(self) -> bool:
        return self.status in (CheckStatus.FAIL, CheckStatus.ERROR)

    def as_json(self) -> Dict[str, Any]:
        return {
            "name": self.name.value,
            "status": self.status.value,
            "detail": self.detail,
        }
