from typing import List, Optional, Tuple

from pydantic import BaseModel, Field

from .path import FitnessBreakdown, Path


class SectionPlan(BaseModel):
    """
    Output of one planner run for one section.

    Attributes:
        section (int): Section the path belongs to (0 = lower, 1 = upper).
        path (Path): The planned node sequence.
        breakdown (FitnessBreakdown): Multi-fitness of the path under the request weights.
        target_goal (int): Goal the planner searched towards.
        intended_goal (int): Goal the user asked for; differs from ``target_goal``
            when an alternative goal was planned.
        elapsed (float): Wall-clock planning time in seconds.
        expanded (Optional[int]): Nodes expanded by A*.
        history (List[float]): Best objective per GA generation, initial population first.
    """

    section: int
    path: Path
    breakdown: FitnessBreakdown
    target_goal: int
    intended_goal: int
    elapsed: float = 0.0
    expanded: Optional[int] = None
    history: List[float] = Field(default_factory=list)

    @property
    def total(self) -> float:
        return self.breakdown.total


class PlanResult(BaseModel):
    """Two-section plan: the lower section path first, then the upper one."""

    algo: str
    lower: SectionPlan
    upper: SectionPlan
    breakdown: FitnessBreakdown
    elapsed: float

    @property
    def lower_path(self) -> Path:
        return self.lower.path

    @property
    def upper_path(self) -> Path:
        return self.upper.path

    @property
    def chosen_goal(self) -> Tuple[int, int]:
        return (self.lower.target_goal, self.upper.target_goal)

    @property
    def total(self) -> float:
        return self.breakdown.total

    def path_key(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return (self.lower.path.nodes, self.upper.path.nodes)

    def to_output(self) -> dict:
        """JSON-ready view without wall-clock timings, for reproducible output."""
        return {
            "algo": self.algo,
            "lower": {
                "path": self.lower.path.to_list(),
                "goal": self.lower.target_goal,
                "intended_goal": self.lower.intended_goal,
                "breakdown": self.lower.breakdown.model_dump(),
            },
            "upper": {
                "path": self.upper.path.to_list(),
                "goal": self.upper.target_goal,
                "intended_goal": self.upper.intended_goal,
                "breakdown": self.upper.breakdown.model_dump(),
            },
            "breakdown": self.breakdown.model_dump(),
        }
