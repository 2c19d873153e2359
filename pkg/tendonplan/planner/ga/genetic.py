import random
import time
from typing import List, Optional

from tendonplan.env import SectionEnv
from tendonplan.fitness import MultiFitness
from tendonplan.planner.ga.config import GaConfig
from tendonplan.planner.ga.operators import (
    Chromosome,
    crossover,
    init_population,
    mutate,
    select_parent,
)
from tendonplan.planner.planner_base import Planner, objective_weights
from tendonplan.types import Mode
from tendonplan.types.path import Path
from tendonplan.types.plan import SectionPlan
from tendonplan.types.weights import CriteriaWeights
from tendonplan.utils import logger
from tendonplan.wear.wear_state import WearState


def _evaluate(population: List[Chromosome], objective: MultiFitness) -> List[Chromosome]:
    return [
        c if c.fitness is not None else c.model_copy(update={"fitness": objective.evaluate(c.path)})
        for c in population
    ]


def _best(population: List[Chromosome]) -> Chromosome:
    # First of equal totals wins.
    return min(population, key=lambda c: c.total)


def _worst_index(population: List[Chromosome]) -> int:
    return max(range(len(population)), key=lambda i: population[i].total)


def evolve(
    population: List[Chromosome],
    objective: MultiFitness,
    cfg: GaConfig,
    rng: random.Random,
    *,
    goal: Optional[int],
    cap: int,
) -> List[Chromosome]:
    """One generation: roulette pairs, crossover, mutation, then the elite
    overwrites the worst offspring."""
    env = objective.env
    elite = _best(population)
    offspring: List[Chromosome] = []
    while len(offspring) < cfg.population_size:
        p1 = select_parent(population, rng)
        p2 = select_parent(population, rng)
        for child in crossover(p1, p2, rng, max_len=cap):
            offspring.append(
                mutate(child, cfg.mutation_rate, rng, env, goal=goal, max_len=cap)
            )
    offspring = _evaluate(offspring[: cfg.population_size], objective)
    offspring[_worst_index(offspring)] = elite
    return offspring


def run_ga(
    env: SectionEnv,
    start: int,
    goal: int,
    weights: CriteriaWeights,
    wear: WearState,
    cfg: Optional[GaConfig] = None,
    mode: Mode = "improved",
    *,
    section: int = 0,
    intended_goal: Optional[int] = None,
    rng: Optional[random.Random] = None,
) -> SectionPlan:
    """
    Genetic search for a path from ``start`` to ``goal``.

    Runs initialization followed by ``cfg.generations`` rounds of evaluation,
    selection, crossover and mutation, and returns the lowest-total chromosome of
    the final population. Improved mode evaluates the multi-fitness under
    ``weights``; classical mode evaluates path length only. The returned
    breakdown is always evaluated under ``weights``.

    Args:
        env (SectionEnv): The section environment.
        start (int): Start node id.
        goal (int): Node id every chromosome walks to.
        weights (CriteriaWeights): Criteria weights of the request.
        wear (WearState): Wear snapshot for the damage criteria.
        cfg (Optional[GaConfig]): GA settings; defaults to ``GaConfig()``.
        mode (Mode): ``"improved"`` or ``"classical"``.
        section (int): Section id stamped on the paths.
        intended_goal (Optional[int]): Accuracy reference; defaults to ``goal``.
        rng (Optional[random.Random]): Generator; seeded from ``cfg.rng_seed`` when omitted.

    Returns:
        SectionPlan: Best path, its breakdown and the per-generation best totals.

    Raises:
        UnknownNodeError: If a node id is not in ``env``.
    """
    begin = time.perf_counter()
    cfg = cfg or GaConfig()
    rng = rng or random.Random(cfg.rng_seed)
    start = env.check_node(start)
    goal = env.check_node(goal)
    intended = goal if intended_goal is None else env.check_node(intended_goal)

    report = MultiFitness.build(weights, wear, intended, section, env)
    search_weights = objective_weights(weights, mode)
    objective = (
        report
        if search_weights is weights
        else MultiFitness.build(search_weights, wear, intended, section, env)
    )

    if start == goal:
        path = Path(section=section, nodes=(start,))
        best_total = objective.evaluate(path).total
        history = [best_total]
    else:
        cap = max(cfg.max_len, env.hop_distances(goal)[start])
        population = _evaluate(
            init_population(env, start, cfg, rng, goal=goal, section=section), objective
        )
        history = [_best(population).total]
        for generation in range(cfg.generations):
            population = evolve(population, objective, cfg, rng, goal=goal, cap=cap)
            history.append(_best(population).total)
            logger.debug("ga.generation", generation=generation, best=history[-1])
        path = _best(population).path

    breakdown = report.evaluate(path)
    elapsed = time.perf_counter() - begin
    logger.debug(
        "ga.done",
        mode=mode,
        section=section,
        start=start,
        goal=goal,
        total=breakdown.total,
        elapsed=elapsed,
    )
    return SectionPlan(
        section=section,
        path=path,
        breakdown=breakdown,
        target_goal=goal,
        intended_goal=intended,
        elapsed=elapsed,
        history=history,
    )


class GeneticPlanner(Planner):
    """
    Genetic planner.

    Attributes:
        config (GaConfig): Population, generation and mutation settings.
    """

    name = "ga"
    config: GaConfig = GaConfig()

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
        return run_ga(
            env,
            start,
            goal,
            weights,
            wear,
            self.config,
            self.mode,
            section=section,
            intended_goal=intended_goal,
        )
