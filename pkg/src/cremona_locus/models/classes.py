"""Divisor and curve classes on the blow-up X of P^3 at 8 general points."""

from typing import Dict, Tuple, TypeVar
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

# The theory stops at 8 points; shorter systems are zero padded.
NUM_POINTS = 8

_V = TypeVar("_V", bound="_LatticeVector")


class _LatticeVector(BaseModel):
    """Shared storage for a degree plus 8 multiplicities (1-based in all I/O)."""

    model_config = ConfigDict(frozen=True)

    degree: int = Field(..., description="Degree of the class")
    mults: Tuple[int, ...] = Field(..., description="Multiplicities at P_1..P_8")

    @field_validator("mults")
    @classmethod
    def _check_arity(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(value) != NUM_POINTS:
            raise ValueError(f"expected {NUM_POINTS} multiplicities, got {len(value)}")
        return tuple(value)

    def mult(self, index: int) -> int:
        """Multiplicity at the point with 1-based label `index`."""
        if not 1 <= index <= NUM_POINTS:
            raise IndexError(f"point index {index} outside 1..{NUM_POINTS}")
        return self.mults[index - 1]

    def with_mults(self: _V, degree: int, changes: Dict[int, int]) -> _V:
        """Copy with a new degree and the given 1-based slots replaced."""
        mults = list(self.mults)
        for index, value in changes.items():
            mults[index - 1] = value
        return type(self)(degree=degree, mults=tuple(mults))

    def __add__(self: _V, other: _V) -> _V:
        return type(self)(
            degree=self.degree + other.degree,
            mults=tuple(a + b for a, b in zip(self.mults, other.mults)),
        )

    def __sub__(self: _V, other: _V) -> _V:
        return type(self)(
            degree=self.degree - other.degree,
            mults=tuple(a - b for a, b in zip(self.mults, other.mults)),
        )

    def __mul__(self: _V, factor: int) -> _V:
        return type(self)(
            degree=self.degree * factor,
            mults=tuple(factor * m for m in self.mults),
        )

    __rmul__ = __mul__

    def as_json(self) -> Dict[str, object]:
        return {"d": self.degree, "m": list(self.mults)}


class DivisorClass(_LatticeVector):
    """
    The class dH - sum m_i E_i of the linear system L3(d; m_1, ..., m_8).

    User-facing classes have d >= 0 and every m_i >= 0. Classes produced in
    the middle of a Cremona reduction may violate both; they are `internal`.
    """

    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {"degree": 15, "mults": [13, 10, 9, 7, 6, 3, 3, 2]}
        },
    )

    @property
    def internal(self) -> bool:
        return self.degree < 0 or any(m < 0 for m in self.mults)

    def __str__(self) -> str:
        from ..utils.notation import render_system

        return render_system(self)


class CurveClass(_LatticeVector):
    """The 1-cycle class delta*h - sum mu_i e_i, written l3(delta; mu_1, ..., mu_8)."""

    def __str__(self) -> str:
        from ..utils.notation import render_system

        return render_system(self, prefix="l3")


class MinusOneCurveId(BaseModel):
    """Identifier (a, b, c) of the (-1)-curve class C_a^{b,c}."""

    model_config = ConfigDict(frozen=True)

    a: int = Field(..., ge=0, description="Level a >= 0 (degree is 2a+1)")
    b: int = Field(..., ge=1, le=NUM_POINTS, description="First distinguished point")
    c: int = Field(..., ge=1, le=NUM_POINTS, description="Second distinguished point")

    @model_validator(mode="after")
    def _check_pair(self) -> "MinusOneCurveId":
        if self.b >= self.c:
            raise ValueError(f"need b < c, got b={self.b}, c={self.c}")
        return self

    @classmethod
    def of(cls, a: int, i: int, j: int) -> "MinusOneCurveId":
        """Build an id from an unordered pair {i, j}."""
        b, c = sorted((i, j))
        return cls(a=a, b=b, c=c)

    @property
    def key(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def pair(self) -> Tuple[int, int]:
        return (self.b, self.c)

    def __str__(self) -> str:
        return f"C_{self.a}^{{{self.b},{self.c}}}"
