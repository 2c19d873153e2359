from .criteria import (
    D_REF,
    S_REF,
    U_REF,
    AccuracyCriterion,
    DistanceCriterion,
    MechanicalDamageCriterion,
    MotorDamageCriterion,
)
from .criterion_base import BaseCriterion, EdgeAdditiveCriterion, FitnessContext
from .multi_fitness import (
    MultiFitness,
    edge_cost,
    f_accuracy,
    f_distance,
    f_mech,
    f_motor,
    multi_fitness,
)

__all__ = [
    "AccuracyCriterion",
    "BaseCriterion",
    "D_REF",
    "DistanceCriterion",
    "EdgeAdditiveCriterion",
    "FitnessContext",
    "MechanicalDamageCriterion",
    "MotorDamageCriterion",
    "MultiFitness",
    "S_REF",
    "U_REF",
    "edge_cost",
    "f_accuracy",
    "f_distance",
    "f_mech",
    "f_motor",
    "multi_fitness",
]
