from typing import Optional, Sequence, Union

from tendonplan.env import SectionEnv, build_section_env
from tendonplan.errors import InvalidPathError
from tendonplan.fitness.criteria import (
    AccuracyCriterion,
    DistanceCriterion,
    MechanicalDamageCriterion,
    MotorDamageCriterion,
)
from tendonplan.fitness.criterion_base import FitnessContext
from tendonplan.types.path import FitnessBreakdown, Path
from tendonplan.types.weights import CriteriaWeights
from tendonplan.wear.wear_state import WearState


class MultiFitness:
    """
    Weighted sum of the four criteria for one section, weights and wear snapshot.

    ``evaluate`` scores whole paths. ``edge_cost`` and ``terminal_cost`` split the
    same total into per-edge shares plus an endpoint share, which is what A* uses:
    for every path, the edge costs plus the terminal cost equal ``evaluate(path).total``.
    """

    def __init__(
        self,
        weights: CriteriaWeights,
        context: FitnessContext,
        mechanical: Optional[MechanicalDamageCriterion] = None,
    ):
        self.weights = weights
        self.context = context
        self.distance = DistanceCriterion()
        self.motor = MotorDamageCriterion()
        self.mechanical = mechanical or MechanicalDamageCriterion()
        self.accuracy = AccuracyCriterion()

    @classmethod
    def build(
        cls,
        weights: CriteriaWeights,
        wear: WearState,
        intended_goal: int,
        section: int = 0,
        env: Optional[SectionEnv] = None,
    ) -> "MultiFitness":
        env = env or build_section_env()
        env.check_node(intended_goal)
        context = FitnessContext(
            env=env, wear=wear, section=section, intended_goal=intended_goal
        )
        return cls(weights, context)

    @property
    def env(self) -> SectionEnv:
        return self.context.env

    def as_path(self, nodes: Union[Path, Sequence[int]]) -> Path:
        if isinstance(nodes, Path):
            if nodes.section != self.context.section:
                raise InvalidPathError(
                    f"path belongs to section {nodes.section}, not {self.context.section}"
                )
            path = nodes
        else:
            path = Path(section=self.context.section, nodes=tuple(nodes))
        self.env.validate_path(path)
        return path

    def evaluate(self, nodes: Union[Path, Sequence[int]]) -> FitnessBreakdown:
        path = self.as_path(nodes)
        w = self.weights
        f_distance = self.distance(path, self.context)
        f_motor = self.motor(path, self.context)
        f_mech = self.mechanical(path, self.context)
        f_accuracy = self.accuracy(path, self.context)
        total = (
            w.distance * f_distance
            + w.motor_damage * f_motor
            + w.mechanical_damage * f_mech
            + w.accuracy * f_accuracy
        )
        return FitnessBreakdown(
            f_distance=f_distance,
            f_motor=f_motor,
            f_mech=f_mech,
            f_accuracy=f_accuracy,
            total=total,
        )

    def edge_cost(self, a: int, b: int) -> float:
        if not self.env.is_adjacent(a, b):
            raise InvalidPathError(f"nodes {a} and {b} are not adjacent")
        w = self.weights
        return (
            w.distance * self.distance.edge_cost(a, b, self.context)
            + w.motor_damage * self.motor.edge_cost(a, b, self.context)
            + w.mechanical_damage * self.mechanical.edge_cost(a, b, self.context)
        )

    def path_edge_cost(self, nodes: Sequence[int]) -> float:
        return sum(self.edge_cost(a, b) for a, b in zip(nodes, nodes[1:]))

    def terminal_cost(self, node: int) -> float:
        return self.weights.accuracy * self.accuracy.endpoint_cost(node, self.context)


def _context(
    wear: Optional[WearState],
    intended_goal: int,
    section: int,
    env: Optional[SectionEnv],
) -> FitnessContext:
    return FitnessContext(
        env=env or build_section_env(),
        wear=wear or WearState.zero(),
        section=section,
        intended_goal=intended_goal,
    )


def _checked(path: Path, env: Optional[SectionEnv]) -> Path:
    (env or build_section_env()).validate_path(path)
    return path


def f_distance(path: Path, env: Optional[SectionEnv] = None) -> float:
    return DistanceCriterion()(_checked(path, env), _context(None, path.end, path.section, env))


def f_motor(path: Path, wear: WearState, env: Optional[SectionEnv] = None) -> float:
    return MotorDamageCriterion()(
        _checked(path, env), _context(wear, path.end, path.section, env)
    )


def f_mech(path: Path, wear: WearState, env: Optional[SectionEnv] = None) -> float:
    return MechanicalDamageCriterion()(
        _checked(path, env), _context(wear, path.end, path.section, env)
    )


def f_accuracy(path: Path, intended_goal: int, env: Optional[SectionEnv] = None) -> float:
    return AccuracyCriterion()(
        _checked(path, env), _context(None, intended_goal, path.section, env)
    )


def multi_fitness(
    path: Path,
    weights: CriteriaWeights,
    wear: WearState,
    intended_goal: int,
    env: Optional[SectionEnv] = None,
) -> FitnessBreakdown:
    return MultiFitness.build(weights, wear, intended_goal, path.section, env).evaluate(path)


def edge_cost(
    a: int,
    b: int,
    weights: CriteriaWeights,
    wear: WearState,
    intended_goal: int,
    section: int = 0,
    env: Optional[SectionEnv] = None,
) -> float:
    return MultiFitness.build(weights, wear, intended_goal, section, env).edge_cost(a, b)
