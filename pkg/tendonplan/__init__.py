from .ahp import consistency, group_weights, weights
from .bench import PlanRequest, criteria_analysis, emit_report, plan, run_bench
from .env import alternative_goals, build_global_env, build_section_env
from .fitness import MultiFitness, edge_cost, multi_fitness
from .planner import GaConfig, get_planner, run_astar, run_ga
from .types import CriteriaWeights, FitnessBreakdown, Path, PlanResult, SectionPlan
from .utils.logging import configure_logging, logger, show_logging
from .wear import WearState, apply_path

__all__ = [
    "CriteriaWeights",
    "FitnessBreakdown",
    "GaConfig",
    "MultiFitness",
    "Path",
    "PlanRequest",
    "PlanResult",
    "SectionPlan",
    "WearState",
    "alternative_goals",
    "apply_path",
    "build_global_env",
    "build_section_env",
    "configure_logging",
    "consistency",
    "criteria_analysis",
    "edge_cost",
    "emit_report",
    "get_planner",
    "group_weights",
    "logger",
    "multi_fitness",
    "plan",
    "run_astar",
    "run_bench",
    "run_ga",
    "show_logging",
    "weights",
]
