from abc import ABC, abstractmethod
from typing import ClassVar, Optional

from pydantic import BaseModel

from tendonplan.env import SectionEnv
from tendonplan.types import Mode
from tendonplan.types.plan import SectionPlan
from tendonplan.types.weights import CriteriaWeights
from tendonplan.wear.wear_state import WearState


def objective_weights(weights: CriteriaWeights, mode: Mode) -> CriteriaWeights:
    """Weights a planner optimizes: the request's in improved mode, path length only in classical mode."""
    if mode == "classical":
        return CriteriaWeights.distance_only()
    return weights


class Planner(BaseModel, ABC):
    """
    Abstract base class for section path planners.

    Attributes:
        mode (Mode): ``"improved"`` optimizes the multi-fitness; ``"classical"``
            optimizes path length only. Either way the returned breakdown is
            evaluated under the caller's weights so that modes stay comparable.
    """

    name: ClassVar[str]
    mode: Mode = "improved"

    @property
    def algo(self) -> str:
        return self.name if self.mode == "improved" else f"{self.name}-classical"

    @abstractmethod
    def plan_section(
        self,
        env: SectionEnv,
        start: int,
        goal: int,
        weights: CriteriaWeights,
        wear: WearState,
        *,
        section: int = 0,
        intended_goal: Optional[int] = None,
    ) -> SectionPlan:
        """
        Plan a path for one section.

        Args:
            env (SectionEnv): The section environment.
            start (int): Start node id.
            goal (int): Node id the planner searches towards.
            weights (CriteriaWeights): Criteria weights of the request.
            wear (WearState): Wear snapshot for the damage criteria.
            section (int): Section id (0 = lower, 1 = upper).
            intended_goal (Optional[int]): Accuracy reference; defaults to ``goal``.

        Returns:
            SectionPlan: The planned path and its fitness breakdown.

        Raises:
            NotImplementedError: This method must be implemented by subclasses.
        """
        raise NotImplementedError("This method must be implemented by subclasses.")
