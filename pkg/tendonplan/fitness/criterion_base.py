from abc import ABC, abstractmethod
from typing import ClassVar

from pydantic import BaseModel, ConfigDict

from tendonplan.env import SectionEnv
from tendonplan.types.path import Path
from tendonplan.wear.wear_state import WearState


class FitnessContext(BaseModel):
    """
    Everything a criterion needs besides the path itself.

    Attributes:
        env (SectionEnv): Environment of the section being planned.
        wear (WearState): Wear snapshot the costs are computed against.
        section (int): Section id, selects the motors and segments to read.
        intended_goal (int): Goal the user asked for; the accuracy reference.
    """

    env: SectionEnv
    wear: WearState
    section: int = 0
    intended_goal: int

    model_config = ConfigDict(frozen=True)


class BaseCriterion(ABC):
    name: ClassVar[str]

    @abstractmethod
    def compute(self, path: Path, context: FitnessContext) -> float:
        """
        Compute the normalized cost of a path for this criterion.

        Args:
            path (Path): A path that is valid in ``context.env``.
            context (FitnessContext): Environment, wear and intended goal.

        Returns:
            float: Non-negative cost; lower is better.
        """
        pass

    def __call__(self, path: Path, context: FitnessContext) -> float:
        return self.compute(path, context)


class EdgeAdditiveCriterion(BaseCriterion):
    """A criterion whose path cost is the sum of independent per-edge costs."""

    @abstractmethod
    def edge_cost(self, a: int, b: int, context: FitnessContext) -> float:
        pass

    def compute(self, path: Path, context: FitnessContext) -> float:
        return sum(self.edge_cost(a, b, context) for a, b in path.edges())
