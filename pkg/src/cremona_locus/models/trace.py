"""Cremona steps, reduction traces and fixed parts."""

from typing import List, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator

from .classes import NUM_POINTS, DivisorClass


class CremonaStep(BaseModel):
    """
    One step of a reduction: renumber, then transform on the first four slots.

    `perm` lists the original point labels in their new slot order (1-based),
    so slot s of the renumbered class holds the point labelled perm[s-1].
    The transform uses the points sitting in slots 1..4, i.e. `basis`.
    """

    model_config = ConfigDict(frozen=True)

    perm: Tuple[int, ...] = Field(..., description="Point labels in slot order")

    @field_validator("perm")
    @classmethod
    def _check_bijection(cls, value: Tuple[int, ...]) -> Tuple[int, ...]:
        if sorted(value) != list(range(1, NUM_POINTS + 1)):
            raise ValueError(f"perm must be a permutation of 1..{NUM_POINTS}: {value}")
        return tuple(value)

    @property
    def basis(self) -> Tuple[int, int, int, int]:
        return tuple(sorted(self.perm[:4]))


class ReductionTrace(BaseModel):
    """Ordered Cremona steps carrying a class to standard form."""

    model_config = ConfigDict(frozen=True)

    steps: Tuple[CremonaStep, ...] = Field(default_factory=tuple)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def bases(self) -> List[Tuple[int, int, int, int]]:
        return [step.basis for step in self.steps]


class StrippedDivisor(BaseModel):
    """A negative multiplicity at the end of a reduction: -m E'_i is fixed."""

    model_config = ConfigDict(frozen=True)

    slot: int = Field(..., description="1-based slot in the sorted end class")
    label: int = Field(..., description="Original point label of that slot")
    mult: int = Field(..., gt=0, description="Multiplicity -m_i of E'_i")


class ReductionResult(BaseModel):
    """Outcome of reducing a class to standard form."""

    model_config = ConfigDict(frozen=True)

    source: DivisorClass = Field(..., description="The class that was reduced")
    standard: DivisorClass = Field(..., description="End class, sorted")
    end_class: DivisorClass = Field(..., description="End class in original labels")
    labels: Tuple[int, ...] = Field(..., description="Original label of each sorted slot")
    trace: ReductionTrace = Field(default_factory=ReductionTrace)
    stripped: Tuple[StrippedDivisor, ...] = Field(default_factory=tuple)
    empty: bool = Field(False, description="True when the degree dropped below 0")


class FixedComponent(BaseModel):
    """A fixed surface F_i (an effective class) with its multiplicity."""

    model_config = ConfigDict(frozen=True)

    divisor: DivisorClass = Field(..., description="The class of F_i")
    mult: int = Field(..., ge=1, description="Multiplicity of F_i in every member")
    label: int = Field(..., description="Label of the exceptional divisor E'_i it comes from")


class FixedPart(BaseModel):
    """The fixed components of a linear system."""

    model_config = ConfigDict(frozen=True)

    items: Tuple[FixedComponent, ...] = Field(default_factory=tuple)

    @property
    def is_empty(self) -> bool:
        return not self.items

    def total(self) -> DivisorClass:
        """Sum of mult * F_i as a single class."""
        total = DivisorClass(degree=0, mults=(0,) * NUM_POINTS)
        for item in self.items:
            total = total + item.divisor * item.mult
        return total
