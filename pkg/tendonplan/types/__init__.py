from typing import Literal, Tuple

from .node import LATTICE_RADIUS, STEP_SPACING, Node
from .path import FitnessBreakdown, Path
from .plan import PlanResult, SectionPlan
from .weights import CRITERIA, CriteriaWeights

NodeId = int

SectionId = Literal[0, 1]

SegmentKey = Tuple[int, int, int]

Algo = Literal["ga", "astar", "ga-classical", "astar-classical"]

Mode = Literal["improved", "classical"]

ALGOS: Tuple[str, ...] = ("astar", "ga", "astar-classical", "ga-classical")


__all__ = [
    "ALGOS",
    "Algo",
    "CRITERIA",
    "CriteriaWeights",
    "FitnessBreakdown",
    "LATTICE_RADIUS",
    "Mode",
    "Node",
    "NodeId",
    "Path",
    "PlanResult",
    "STEP_SPACING",
    "SectionId",
    "SectionPlan",
    "SegmentKey",
]
