from typing import Optional

from .astar import AStarPlanner, Metric, SearchNode, heuristic, run_astar
from .ga import Chromosome, GaConfig, GeneticPlanner, run_ga
from .planner_base import Planner, objective_weights


def get_planner(
    algo: str, ga_config: Optional[GaConfig] = None, metric: Metric = "euclidean"
) -> Planner:
    """Planner for ``ga``, ``astar``, ``ga-classical`` or ``astar-classical``."""
    name, _, suffix = algo.partition("-")
    if suffix not in ("", "classical"):
        raise ValueError(f"unknown algorithm {algo!r}")
    mode = "classical" if suffix else "improved"
    if name == "astar":
        return AStarPlanner(mode=mode, metric=metric)
    if name == "ga":
        return GeneticPlanner(mode=mode, config=ga_config or GaConfig())
    raise ValueError(f"unknown algorithm {algo!r}")


__all__ = [
    "AStarPlanner",
    "Chromosome",
    "GaConfig",
    "GeneticPlanner",
    "Metric",
    "Planner",
    "SearchNode",
    "get_planner",
    "heuristic",
    "objective_weights",
    "run_astar",
    "run_ga",
]
