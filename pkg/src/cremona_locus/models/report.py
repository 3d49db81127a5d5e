"""Base locus and report models."""

from enum import Enum
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator

from .classes import NUM_POINTS, DivisorClass, MinusOneCurveId
from .state import CheckResult
from .trace import FixedPart

POINT_DESCRIPTION = (
    "unique base point of the system on D_Q8: m P' - (m-1) Q, with P' the eighth point "
    "of the quadric net through the seven points and Q the remaining point"
)


class StandardCase(str, Enum):
    """The four cases of the base locus of a class in standard form."""

    BASE_POINT_FREE = "base_point_free"
    ANTICANONICAL_CURVE = "anticanonical_curve"
    ISOLATED_POINT = "isolated_point"
    LINES = "lines"


class BaseCurve(BaseModel):
    """A (-1)-curve C_a^{b,c} in the base locus with its multiplicity."""

    model_config = ConfigDict(frozen=True)

    id: MinusOneCurveId = Field(..., description="Which curve")
    mult: int = Field(..., ge=1, description="t_a^{b,c} = -L.C_a^{b,c}")

    def as_json(self) -> Dict[str, int]:
        return {"a": self.id.a, "b": self.id.b, "c": self.id.c, "mult": self.mult}


class PointSpec(BaseModel):
    """
    Symbolic description of the isolated base point P.

    In the standard end class L3(2m; m^7, m-1) the system restricted to D_Q8
    has one base point P besides the assigned ones. On the curve P is
    m P' - (m-1) Q, where P' is the eighth associated point of the seven
    points of multiplicity m and Q is the point of multiplicity m-1; for
    m = 1 it is the eighth point itself.
    """

    model_config = ConfigDict(frozen=True)

    mult: int = Field(..., ge=1, description="Multiplicity m of the point")
    seven: Tuple[int, ...] = Field(..., description="Labels of the seven points")
    description: str = Field(POINT_DESCRIPTION)

    @field_validator("seven")
    @classmethod
    def _check_seven(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(value) != 7 or len(set(value)) != 7:
            raise ValueError(f"need 7 distinct point labels, got {value}")
        if any(not 1 <= i <= NUM_POINTS for i in value):
            raise ValueError(f"point labels must lie in 1..{NUM_POINTS}: {value}")
        return tuple(sorted(value))

    def as_json(self) -> Dict[str, Any]:
        return {"mult": self.mult, "seven": list(self.seven)}


class BaseLocusResult(BaseModel):
    """
    The base locus of a linear system as a formal sum.

    fixed surfaces + base curves + dq8_mult * D_Q8 + optional isolated point.
    """

    model_config = ConfigDict(frozen=True)

    system: DivisorClass = Field(..., description="The input system")
    residual: DivisorClass = Field(..., description="System minus its fixed part")
    fixed: FixedPart = Field(default_factory=FixedPart)
    curves: Tuple[BaseCurve, ...] = Field(default_factory=tuple)
    dq8_mult: int = Field(0, ge=0, description="Coefficient of D_Q8")
    point: Optional[PointSpec] = Field(None, description="Isolated fat point, if any")
    trace_len: int = Field(0, ge=0, description="Cremona steps used on the residual")
    standard_case: Optional[StandardCase] = Field(
        None, description="Case of the residual when it is in standard form"
    )

    @property
    def is_base_point_free(self) -> bool:
        return (
            self.fixed.is_empty
            and not self.curves
            and self.dq8_mult == 0
            and self.point is None
        )


class SystemReport(BaseModel):
    """
    Machine-readable output of every CLI command.

    One schema for all commands; sections a command does not compute are None.
    """

    system: DivisorClass
    h0: Optional[int] = None
    fixed: Optional[List[Dict[str, Any]]] = None
    residual: Optional[Dict[str, Any]] = None
    curves: Optional[List[Dict[str, int]]] = None
    dq8_mult: Optional[int] = None
    point: Optional[Dict[str, Any]] = None
    trace_len: Optional[int] = None
    checks: Optional[List[CheckResult]] = None

    def to_json_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "system": self.system.as_json(),
            "h0": self.h0,
            "fixed": self.fixed,
            "residual": self.residual,
            "curves": self.curves,
            "dq8_mult": self.dq8_mult,
            "point": self.point,
            "trace_len": self.trace_len,
            "checks": None,
        }
        if self.checks is not None:
            data["checks"] = [check.as_json() for check in self.checks]
        return data
