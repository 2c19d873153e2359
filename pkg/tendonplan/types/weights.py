import math
from typing import Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

CRITERIA: Tuple[str, ...] = (
    "distance",
    "motor_damage",
    "mechanical_damage",
    "accuracy",
)


class CriteriaWeights(BaseModel):
    """
    Weights of the four resilience criteria in the multi-fitness sum.

    AHP-derived weights are strictly positive and sum to one. ``normalized=False``
    lifts the sum-to-one rule for raw unit weights and scaled weight vectors.

    Attributes:
        distance (float): Weight of the path length criterion.
        motor_damage (float): Weight of the motor step criterion.
        mechanical_damage (float): Weight of the tendon segment usage criterion.
        accuracy (float): Weight of the tip accuracy criterion.
        group_index (Optional[int]): Criteria group (1..15) the weights came from.
        normalized (bool): Whether the weights are required to sum to one.
    """

    distance: float = Field(ge=0)
    motor_damage: float = Field(ge=0)
    mechanical_damage: float = Field(ge=0)
    accuracy: float = Field(ge=0)
    group_index: Optional[int] = Field(default=None, ge=1, le=15)
    normalized: bool = True

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_sum(self) -> "CriteriaWeights":
        total = sum(self.w)
        if self.normalized and not math.isclose(total, 1.0, abs_tol=1e-9):
            raise ValueError(f"normalized weights must sum to 1, got {total}")
        return self

    @property
    def w(self) -> Tuple[float, float, float, float]:
        return (self.distance, self.motor_damage, self.mechanical_damage, self.accuracy)

    def as_dict(self) -> dict:
        return dict(zip(CRITERIA, self.w))

    def scaled(self, factor: float) -> "CriteriaWeights":
        if factor <= 0:
            raise ValueError("scale factor must be positive")
        return CriteriaWeights.from_sequence(
            [factor * x for x in self.w],
            group_index=self.group_index,
            normalized=False,
        )

    @classmethod
    def from_sequence(
        cls,
        values: Sequence[float],
        group_index: Optional[int] = None,
        normalized: bool = True,
    ) -> "CriteriaWeights":
        if len(values) != len(CRITERIA):
            raise ValueError(f"expected {len(CRITERIA)} weights, got {len(values)}")
        return cls(
            **dict(zip(CRITERIA, (float(v) for v in values))),
            group_index=group_index,
            normalized=normalized,
        )

    @classmethod
    def distance_only(cls) -> "CriteriaWeights":
        """Weights of the classical planners, which only look at path length."""
        return cls(distance=1.0, motor_damage=0.0, mechanical_damage=0.0, accuracy=0.0)

    @classmethod
    def equal(cls) -> "CriteriaWeights":
        return cls.from_sequence([0.25] * len(CRITERIA))
