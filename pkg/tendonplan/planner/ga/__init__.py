from .config import GaConfig
from .genetic import GeneticPlanner, evolve, run_ga
from .operators import (
    SELECTION_EPS,
    Chromosome,
    crossover,
    goal_walk,
    init_population,
    mutate,
    random_walk,
    select_parent,
)

__all__ = [
    "Chromosome",
    "GaConfig",
    "GeneticPlanner",
    "SELECTION_EPS",
    "crossover",
    "evolve",
    "goal_walk",
    "init_population",
    "mutate",
    "random_walk",
    "run_ga",
    "select_parent",
]
