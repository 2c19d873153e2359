import random
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from tendonplan.env import SectionEnv
from tendonplan.errors import InvalidPathError
from tendonplan.planner.ga.config import GaConfig
from tendonplan.types.path import FitnessBreakdown, Path

SELECTION_EPS: float = 1e-9


class Chromosome(BaseModel):
    """A candidate path plus its cached fitness (``None`` until evaluated)."""

    path: Path
    fitness: Optional[FitnessBreakdown] = None

    model_config = ConfigDict(frozen=True)

    @property
    def nodes(self) -> Tuple[int, ...]:
        return self.path.nodes

    @property
    def total(self) -> float:
        if self.fitness is None:
            raise ValueError("chromosome has not been evaluated")
        return self.fitness.total


def _with_nodes(parent: Chromosome, nodes: Sequence[int]) -> Chromosome:
    return Chromosome(path=Path(section=parent.path.section, nodes=tuple(nodes)))


def random_walk(env: SectionEnv, start: int, max_len: int, rng: random.Random) -> List[int]:
    """Walk of U[1, max_len] edges, each step to a uniformly drawn neighbor."""
    length = rng.randint(1, max_len) if max_len >= 1 else 0
    nodes = [start]
    for _ in range(length):
        nodes.append(rng.choice(env.neighbors(nodes[-1])))
    return nodes


def goal_walk(
    env: SectionEnv, start: int, goal: int, max_len: int, rng: random.Random
) -> List[int]:
    """Random walk that is guaranteed to end at ``goal``.

    A length budget is drawn from [hops(start, goal), max(max_len, hops)]; each
    step goes to a uniformly drawn neighbor from which the goal is still
    reachable within the remaining budget. The walk stops at the first goal visit.
    """
    to_goal = env.hop_distances(goal)
    shortest = to_goal[start]
    remaining = rng.randint(shortest, max(max_len, shortest))
    nodes = [start]
    while nodes[-1] != goal:
        remaining -= 1
        candidates = [nb for nb in env.neighbors(nodes[-1]) if to_goal[nb] <= remaining]
        nodes.append(rng.choice(candidates))
    return nodes


def init_population(
    env: SectionEnv,
    start: int,
    cfg: GaConfig,
    rng: Optional[random.Random] = None,
    *,
    goal: Optional[int] = None,
    section: int = 0,
) -> List[Chromosome]:
    """
    Build the initial population from random walks over the adjacency.

    Args:
        env (SectionEnv): The section environment.
        start (int): Node every chromosome starts at.
        cfg (GaConfig): Population size and walk length bound.
        rng (Optional[random.Random]): Generator; seeded from ``cfg.rng_seed`` when omitted.
        goal (Optional[int]): When given, every walk ends at this node.
        section (int): Section id stamped on the paths.

    Returns:
        List[Chromosome]: ``cfg.population_size`` unevaluated chromosomes.
    """
    rng = rng or random.Random(cfg.rng_seed)
    start = env.check_node(start)
    if goal is not None:
        goal = env.check_node(goal)

    population = []
    for _ in range(cfg.population_size):
        if goal is None:
            nodes = random_walk(env, start, cfg.max_len, rng)
        else:
            nodes = goal_walk(env, start, goal, cfg.max_len, rng)
        population.append(Chromosome(path=Path(section=section, nodes=tuple(nodes))))
    return population


def select_parent(population: Sequence[Chromosome], rng: random.Random) -> Chromosome:
    """Roulette wheel on inverse cost: cheaper chromosomes take bigger slices."""
    if not population:
        raise ValueError("cannot select a parent from an empty population")
    slices = [1.0 / (c.total + SELECTION_EPS) for c in population]
    return rng.choices(population, weights=slices, k=1)[0]


def crossover(
    p1: Chromosome,
    p2: Chromosome,
    rng: random.Random,
    *,
    max_len: Optional[int] = None,
) -> Tuple[Chromosome, Chromosome]:
    """
    Single-point crossover at a node both parents visit.

    The junction ``(i, j)`` with ``p1[i] == p2[j]`` is drawn uniformly; child one is
    ``p1[:i+1] + p2[j+1:]`` and child two ``p2[:j+1] + p1[i+1:]``. When the parents
    only share their start, the tails are swapped whole. A child longer than
    ``max_len`` edges is replaced by its parent.
    """
    a, b = p1.nodes, p2.nodes
    if a[0] != b[0]:
        raise InvalidPathError(f"parents start at different nodes ({a[0]} and {b[0]})")
    if a == b:
        return p1.model_copy(), p2.model_copy()

    junctions = [
        (i, j)
        for i, x in enumerate(a)
        for j, y in enumerate(b)
        if x == y and (i, j) != (0, 0)
    ]
    i, j = rng.choice(junctions) if junctions else (0, 0)

    children = []
    for parent, head, tail in ((p1, a[: i + 1], b[j + 1 :]), (p2, b[: j + 1], a[i + 1 :])):
        nodes = head + tail
        if max_len is not None and len(nodes) - 1 > max_len:
            children.append(parent.model_copy())
        else:
            children.append(_with_nodes(parent, nodes))
    return children[0], children[1]


def mutate(
    c: Chromosome,
    rate: float,
    rng: random.Random,
    env: SectionEnv,
    *,
    goal: Optional[int] = None,
    max_len: Optional[int] = None,
) -> Chromosome:
    """
    Random single-gene mutation with repair.

    With probability ``rate`` a gene ``g >= 1`` is replaced by a random neighbor of
    gene ``g - 1``. Without a goal the path is cut after ``g`` when gene ``g + 1`` is
    no longer adjacent. With a goal only interior genes mutate and the new gene is
    reconnected to gene ``g + 1`` by a fewest-hops bridge, so the path still ends at
    the goal; a repair longer than ``max_len`` edges is discarded.
    """
    if not 0.0 <= rate <= 1.0:
        raise ValueError(f"mutation rate must be in [0, 1], got {rate}")
    if rng.random() >= rate:
        return c

    nodes = list(c.nodes)
    if goal is None:
        if len(nodes) < 2:
            return c
        g = rng.randint(1, len(nodes) - 1)
        nodes[g] = rng.choice(env.neighbors(nodes[g - 1]))
        if g + 1 < len(nodes) and not env.is_adjacent(nodes[g], nodes[g + 1]):
            nodes = nodes[: g + 1]
    else:
        if len(nodes) < 3:
            return c
        g = rng.randint(1, len(nodes) - 2)
        replacement = rng.choice(env.neighbors(nodes[g - 1]))
        bridge = env.shortest_hops(replacement, nodes[g + 1])
        nodes = nodes[:g] + bridge + nodes[g + 2 :]
        if max_len is not None and len(nodes) - 1 > max_len:
            return c
    return _with_nodes(c, nodes)
