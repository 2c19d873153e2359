import heapq
import time
from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel

from tendonplan.env import SectionEnv
from tendonplan.errors import UnreachableGoalError
from tendonplan.fitness import D_REF, MultiFitness
from tendonplan.planner.planner_base import Planner, objective_weights
from tendonplan.types import Mode
from tendonplan.types.path import Path
from tendonplan.types.plan import SectionPlan
from tendonplan.types.weights import CriteriaWeights
from tendonplan.utils import logger
from tendonplan.wear.wear_state import WearState

Metric = Literal["euclidean", "manhattan"]

# Improvements smaller than this are float noise between equal-cost routes.
REOPEN_TOL: float = 1e-12


class SearchNode(BaseModel):
    node: int
    g: float
    f: float
    parent: Optional[int] = None
    state: Literal["open", "closed"] = "open"


def heuristic(
    n: int,
    goal: int,
    weights: CriteriaWeights,
    env: SectionEnv,
    metric: Metric = "euclidean",
) -> float:
    """Distance share of the remaining cost. Every edge costs at least its distance
    share, so the estimate never overshoots."""
    if metric == "manhattan":
        a, b = env.node(n).steps, env.node(goal).steps
        length = abs(a[0] - b[0]) + abs(a[1] - b[1])
    else:
        length = env.distance(n, goal)
    return weights.distance * length / D_REF


def _reconstruct(nodes: Dict[int, SearchNode], goal: int) -> List[int]:
    path = [goal]
    while nodes[path[-1]].parent is not None:
        path.append(nodes[path[-1]].parent)
    path.reverse()
    return path


def run_astar(
    env: SectionEnv,
    start: int,
    goal: int,
    weights: CriteriaWeights,
    wear: WearState,
    mode: Mode = "improved",
    *,
    section: int = 0,
    intended_goal: Optional[int] = None,
    metric: Metric = "euclidean",
) -> SectionPlan:
    """
    A* search over the section lattice.

    The open list is a heap ordered by (f, g, node id). A node is reopened when a
    cheaper route to it is found, even if it was already closed. Improved mode
    uses the multi-fitness edge costs; classical mode uses path length only.

    Raises:
        UnknownNodeError: If ``start``, ``goal`` or ``intended_goal`` is not a node.
        UnreachableGoalError: If the open list runs empty before reaching ``goal``.
    """
    begin = time.perf_counter()
    start = env.check_node(start)
    goal = env.check_node(goal)
    intended = goal if intended_goal is None else env.check_node(intended_goal)

    search_weights = objective_weights(weights, mode)
    costs = MultiFitness.build(search_weights, wear, intended, section, env)

    h_start = heuristic(start, goal, search_weights, env, metric)
    nodes: Dict[int, SearchNode] = {start: SearchNode(node=start, g=0.0, f=h_start)}
    open_heap: List[Tuple[float, float, int]] = [(h_start, 0.0, start)]
    expanded = 0

    while open_heap:
        _, g, current = heapq.heappop(open_heap)
        record = nodes[current]
        if record.state != "open" or g != record.g:
            continue
        if current == goal:
            break
        record.state = "closed"
        expanded += 1

        for nb in env.neighbors(current):
            tentative = record.g + costs.edge_cost(current, nb)
            known = nodes.get(nb)
            if known is None:
                known = SearchNode(node=nb, g=tentative, f=0.0, parent=current)
                nodes[nb] = known
            elif tentative < known.g - REOPEN_TOL:
                known.g = tentative
                known.parent = current
                known.state = "open"
            else:
                continue
            known.f = tentative + heuristic(nb, goal, search_weights, env, metric)
            heapq.heappush(open_heap, (known.f, known.g, nb))
    else:
        raise UnreachableGoalError(f"goal {goal} is unreachable from {start}")

    path = Path(section=section, nodes=tuple(_reconstruct(nodes, goal)))
    report = (
        costs
        if search_weights is weights
        else MultiFitness.build(weights, wear, intended, section, env)
    )
    breakdown = report.evaluate(path)
    elapsed = time.perf_counter() - begin
    logger.debug(
        "astar.done",
        mode=mode,
        section=section,
        start=start,
        goal=goal,
        total=breakdown.total,
        expanded=expanded,
        elapsed=elapsed,
    )
    return SectionPlan(
        section=section,
        path=path,
        breakdown=breakdown,
        target_goal=goal,
        intended_goal=intended,
        elapsed=elapsed,
        expanded=expanded,
    )


class AStarPlanner(Planner):
    """
    A* planner.

    Attributes:
        metric (Metric): Distance used by the heuristic. Both are admissible on the
            axis-aligned lattice; Euclidean is the default.
    """

    name = "astar"
    metric: Metric = "euclidean"

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
        return run_astar(
            env,
            start,
            goal,
            weights,
            wear,
            self.mode,
            section=section,
            intended_goal=intended_goal,
            metric=self.metric,
        )
