from typing import Callable, List, Tuple

import networkx as nx
import pytest

from tendonplan.env import SectionEnv, build_section_env
from tendonplan.fitness import MultiFitness
from tendonplan.types.weights import CriteriaWeights
from tendonplan.wear import WearState


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long acceptance runs")


@pytest.fixture
def env() -> SectionEnv:
    return build_section_env()


@pytest.fixture
def zero_wear() -> WearState:
    return WearState.zero()


@pytest.fixture
def random_wear() -> Callable[[int], WearState]:
    def make(seed: int) -> WearState:
        return WearState.random(seed)

    return make


def dijkstra_optimum(
    env: SectionEnv,
    start: int,
    goal: int,
    weights: CriteriaWeights,
    wear: WearState,
    section: int = 0,
) -> Tuple[float, List[int]]:
    """Cheapest edge-cost route by networkx, independent of the A* code."""
    costs = MultiFitness.build(weights, wear, goal, section, env)
    graph = nx.Graph()
    for a in range(len(env)):
        for b in env.neighbors(a):
            graph.add_edge(a, b)

    def weight(u, v, _):
        return costs.edge_cost(u, v)

    length, path = nx.single_source_dijkstra(graph, start, goal, weight=weight)
    return length, path


@pytest.fixture
def oracle():
    return dijkstra_optimum
