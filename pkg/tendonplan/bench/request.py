from typing import Optional

from pydantic import BaseModel, Field, model_validator

from tendonplan.ahp import DEFAULT_IMPORTANCE, group_weights
from tendonplan.env import build_section_env
from tendonplan.planner.ga import GaConfig
from tendonplan.types import Algo
from tendonplan.types.weights import CriteriaWeights

# Start and goal nodes of the reference experiments.
LOWER_START, LOWER_GOAL = 50, 3
UPPER_START, UPPER_GOAL = 47, 14


class PlanRequest(BaseModel):
    """
    A two-section planning request.

    Exactly one of ``group_index`` and ``weights`` selects the criteria weights.

    Attributes:
        lower_start (int): Start node of the lower section.
        lower_goal (int): Intended goal of the lower section.
        upper_start (int): Start node of the upper section.
        upper_goal (int): Intended goal of the upper section.
        group_index (Optional[int]): Criteria group 1..15, resolved through AHP.
        weights (Optional[CriteriaWeights]): Explicit criteria weights.
        raw_equal_weights (bool): Group 15 as unit weights (1, 1, 1, 1) instead of 0.25 each.
        importance (int): Saaty intensity of a prioritized criterion over the others.
        algo (Algo): ``ga``, ``astar``, ``ga-classical`` or ``astar-classical``.
        use_alternatives (bool): Also plan to the 3 nodes nearest each goal and keep the cheapest.
        runs (int): Repetitions when the request is used as a bench template.
        rng_seed (Optional[int]): GA seed.
        ga (GaConfig): GA settings; its ``rng_seed`` is replaced by the request's.
    """

    lower_start: int = LOWER_START
    lower_goal: int = LOWER_GOAL
    upper_start: int = UPPER_START
    upper_goal: int = UPPER_GOAL
    group_index: Optional[int] = Field(default=None, ge=1, le=15)
    weights: Optional[CriteriaWeights] = None
    raw_equal_weights: bool = False
    importance: int = DEFAULT_IMPORTANCE
    algo: Algo = "astar"
    use_alternatives: bool = False
    runs: int = Field(default=1, ge=1)
    rng_seed: Optional[int] = None
    ga: GaConfig = Field(default_factory=GaConfig)

    @model_validator(mode="after")
    def _check_request(self) -> "PlanRequest":
        env = build_section_env()
        for node_id in (self.lower_start, self.lower_goal, self.upper_start, self.upper_goal):
            env.check_node(node_id)
        if (self.group_index is None) == (self.weights is None):
            raise ValueError("exactly one of group_index and weights must be given")
        return self

    def resolved_weights(self) -> CriteriaWeights:
        if self.weights is not None:
            return self.weights
        return group_weights(self.group_index, self.raw_equal_weights, self.importance)

    def ga_config(self) -> GaConfig:
        if self.rng_seed is None:
            return self.ga
        return self.ga.model_copy(update={"rng_seed": self.rng_seed})

    def for_run(self, algo: str, group_index: int, rng_seed: Optional[int]) -> "PlanRequest":
        """Copy of this template for one bench cell."""
        return self.model_copy(
            update={
                "algo": algo,
                "group_index": group_index,
                "weights": None,
                "rng_seed": rng_seed,
            }
        )
