"""Models for the finite-field oracle."""

from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from .classes import NUM_POINTS

Point = Tuple[int, int, int, int]


class PointConfiguration(BaseModel):
    """Eight points of P^3 over F_p, reproducible from (prime, seed)."""

    model_config = ConfigDict(frozen=True)

    prime: int = Field(..., description="Field characteristic p")
    seed: int = Field(..., ge=0, description="Seed the points were drawn from")
    points: Tuple[Point, ...] = Field(..., description="Coordinates of P_1..P_8")

    @field_validator("points")
    @classmethod
    def _check_points(cls, value: Tuple[Point, ...]) -> Tuple[Point, ...]:
        if len(value) != NUM_POINTS:
            raise ValueError(f"need {NUM_POINTS} points, got {len(value)}")
        return value

    def point(self, i: int) -> np.ndarray:
        """Coordinates of P_i (1-based) as an int64 vector."""
        return np.array(self.points[i - 1], dtype=np.int64)

    def frame(self, labels: Tuple[int, ...]) -> np.ndarray:
        """Matrix whose columns are the points with the given labels."""
        return np.array([self.points[i - 1] for i in labels], dtype=np.int64).T


class KernelBasis(BaseModel):
    """
    Basis of the degree-d forms satisfying the vanishing conditions.

    Vectors are indexed by the degree-d monomials in graded-lex order.
    """

    model_config = ConfigDict(frozen=True)

    degree: int = Field(..., ge=0)
    prime: int
    mults: Tuple[int, ...] = Field(default_factory=tuple)
    vectors: Tuple[Tuple[int, ...], ...] = Field(default_factory=tuple)

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def as_array(self) -> np.ndarray:
        return np.array(self.vectors, dtype=np.int64).reshape(len(self.vectors), -1)
