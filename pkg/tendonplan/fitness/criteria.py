from tendonplan.env import STEPS_PER_REVOLUTION
from tendonplan.fitness.criterion_base import (
    BaseCriterion,
    EdgeAdditiveCriterion,
    FitnessContext,
)
from tendonplan.types.node import LATTICE_RADIUS, STEP_SPACING
from tendonplan.types.path import Path
from tendonplan.wear.wear_state import motor_for

# Lattice diameter in motor steps: 10 edges of 70 steps.
D_REF: float = 2 * LATTICE_RADIUS * STEP_SPACING
# 100 motor revolutions.
S_REF: float = 100 * STEPS_PER_REVOLUTION
U_REF: float = 100.0


class DistanceCriterion(EdgeAdditiveCriterion):
    """Sum of Euclidean lengths of the path edges."""

    name = "distance"

    def edge_cost(self, a: int, b: int, context: FitnessContext) -> float:
        return context.env.distance(a, b) / D_REF


class MotorDamageCriterion(EdgeAdditiveCriterion):
    """Motor steps of the path, each weighted by how worn its motor already is."""

    name = "motor_damage"

    def wear_factor(self, motor_id: int, context: FitnessContext) -> float:
        return 1.0 + context.wear.motor(motor_id) / S_REF

    def edge_cost(self, a: int, b: int, context: FitnessContext) -> float:
        motor_id = motor_for(context.section, context.env.axis(a, b))
        return self.wear_factor(motor_id, context) * STEP_SPACING / S_REF


class MechanicalDamageCriterion(EdgeAdditiveCriterion):
    """Historical use of every traversed tendon segment, counting the new traversal.

    With ``averaged=True`` the path cost is divided by its edge count (floor 1).
    That variant is not edge-additive, so planners use the default.
    """

    name = "mechanical_damage"

    def __init__(self, averaged: bool = False):
        self.averaged = averaged

    def edge_cost(self, a: int, b: int, context: FitnessContext) -> float:
        return (context.wear.segment_count(context.section, a, b) + 1) / U_REF

    def compute(self, path: Path, context: FitnessContext) -> float:
        cost = super().compute(path, context)
        if self.averaged:
            return cost / max(1, path.num_edges)
        return cost


class AccuracyCriterion(BaseCriterion):
    """Distance between where the path ends and where the user wanted to go."""

    name = "accuracy"

    def endpoint_cost(self, node: int, context: FitnessContext) -> float:
        return context.env.distance(node, context.intended_goal) / D_REF

    def compute(self, path: Path, context: FitnessContext) -> float:
        return self.endpoint_cost(path.end, context)
