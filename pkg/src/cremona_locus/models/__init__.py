"""Data models for cremona-locus."""

from .classes import NUM_POINTS, CurveClass, DivisorClass, MinusOneCurveId
from .trace import (
    CremonaStep,
    FixedComponent,
    FixedPart,
    ReductionResult,
    ReductionTrace,
    StrippedDivisor,
)
from .report import BaseCurve, BaseLocusResult, PointSpec, StandardCase, SystemReport
from .state import CheckName, CheckResult, CheckStatus

__all__ = [
    "NUM_POINTS",
    "CurveClass",
    "DivisorClass",
    "MinusOneCurveId",
    "CremonaStep",
    "FixedComponent",
    "FixedPart",
    "ReductionResult",
    "ReductionTrace",
    "StrippedDivisor",
    "BaseCurve",
    "BaseLocusResult",
    "PointSpec",
    "StandardCase",
    "SystemReport",
    "CheckName",
    "CheckResult",
    "CheckStatus",
]
