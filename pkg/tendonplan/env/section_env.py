import math
from collections import deque
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, PrivateAttr, model_validator

from tendonplan.errors import InvalidPathError, UnknownNodeError
from tendonplan.types.node import LATTICE_RADIUS, STEP_SPACING, Node
from tendonplan.types.path import Path

NUM_SECTIONS: int = 2
MOTORS_PER_SECTION: int = 2
STEPS_PER_REVOLUTION: int = 800
DEFAULT_ALTERNATIVES: int = 3

DUMP_COLUMNS: Tuple[str, ...] = ("id", "i", "j", "x_steps", "y_steps", "neighbors")


class SectionEnv(BaseModel):
    """
    Discrete environment of one robot section.

    Nodes are the lattice points the section tip can stop at; edges are the
    single-axis moves of one lattice unit (70 motor steps) between them.

    Attributes:
        nodes (Tuple[Node, ...]): All nodes, indexed by id.
        adjacency (Dict[int, Tuple[int, ...]]): Sorted neighbor ids per node id.
    """

    nodes: Tuple[Node, ...]
    adjacency: Dict[int, Tuple[int, ...]]

    model_config = ConfigDict(frozen=True)

    _hops: Dict[int, Dict[int, int]] = PrivateAttr(default_factory=dict)

    @model_validator(mode="after")
    def _check_graph(self) -> "SectionEnv":
        for index, node in enumerate(self.nodes):
            if node.id != index:
                raise ValueError(f"node at position {index} has id {node.id}")
        for a, neighbors in self.adjacency.items():
            for b in neighbors:
                if a not in self.adjacency.get(b, ()):
                    raise ValueError(f"adjacency is not symmetric for ({a}, {b})")
                (ai, aj), (bi, bj) = self.nodes[a].coord, self.nodes[b].coord
                if abs(ai - bi) + abs(aj - bj) != 1:
                    raise ValueError(f"nodes {a} and {b} are not one lattice unit apart")
        return self

    def __len__(self) -> int:
        return len(self.nodes)

    @cached_property
    def _by_coord(self) -> Dict[Tuple[int, int], int]:
        return {node.coord: node.id for node in self.nodes}

    @cached_property
    def step_array(self) -> np.ndarray:
        """Motor-step coordinates as an ``(n, 2)`` integer array, row = node id."""
        return np.array([node.steps for node in self.nodes], dtype=np.int64)

    @cached_property
    def num_edges(self) -> int:
        return sum(len(v) for v in self.adjacency.values()) // 2

    def check_node(self, node_id: int) -> int:
        if (
            isinstance(node_id, bool)
            or not isinstance(node_id, (int, np.integer))
            or not 0 <= node_id < len(self.nodes)
        ):
            raise UnknownNodeError(node_id, len(self.nodes))
        return int(node_id)

    def node(self, node_id: int) -> Node:
        return self.nodes[self.check_node(node_id)]

    def node_at(self, i: int, j: int) -> Node:
        try:
            return self.nodes[self._by_coord[(i, j)]]
        except KeyError:
            raise ValueError(f"no node at lattice coord ({i}, {j})") from None

    def neighbors(self, node_id: int) -> Tuple[int, ...]:
        return self.adjacency[self.check_node(node_id)]

    def is_adjacent(self, a: int, b: int) -> bool:
        return b in self.adjacency.get(a, ())

    def axis(self, a: int, b: int) -> int:
        """Axis moved along edge ``a-b``: 0 for X, 1 for Y."""
        if not self.is_adjacent(a, b):
            raise InvalidPathError(f"nodes {a} and {b} are not adjacent")
        return 0 if self.nodes[a].coord[0] != self.nodes[b].coord[0] else 1

    def distance(self, a: int, b: int) -> float:
        return euclidean(self.node(a), self.node(b))

    def validate_path(
        self, nodes: Union[Path, Sequence[int]], start: Optional[int] = None
    ) -> Tuple[int, ...]:
        ids = nodes.nodes if isinstance(nodes, Path) else tuple(nodes)
        if not ids:
            raise InvalidPathError("path is empty")
        for node_id in ids:
            self.check_node(node_id)
        if start is not None and ids[0] != start:
            raise InvalidPathError(f"path starts at {ids[0]}, expected {start}")
        for a, b in zip(ids, ids[1:]):
            if not self.is_adjacent(a, b):
                raise InvalidPathError(f"nodes {a} and {b} are not adjacent")
        return ids

    def hop_distances(self, source: int) -> Dict[int, int]:
        """BFS hop counts from ``source`` to every node."""
        source = self.check_node(source)
        cached = self._hops.get(source)
        if cached is None:
            cached = {source: 0}
            queue = deque([source])
            while queue:
                current = queue.popleft()
                for nb in self.adjacency[current]:
                    if nb not in cached:
                        cached[nb] = cached[current] + 1
                        queue.append(nb)
            self._hops[source] = cached
        return cached

    def shortest_hops(self, a: int, b: int) -> List[int]:
        """A fewest-edges path from ``a`` to ``b``; lowest neighbor ids win ties."""
        to_b = self.hop_distances(b)
        path = [self.check_node(a)]
        while path[-1] != b:
            current = path[-1]
            path.append(min(nb for nb in self.adjacency[current] if to_b[nb] == to_b[current] - 1))
        return path

    def dump_rows(self) -> List[Tuple]:
        return [
            (
                node.id,
                node.coord[0],
                node.coord[1],
                node.steps[0],
                node.steps[1],
                ";".join(str(nb) for nb in self.adjacency[node.id]),
            )
            for node in self.nodes
        ]


class GlobalEnv(BaseModel):
    """Both sections together; a composite state is a (lower node, upper node) pair."""

    lower: SectionEnv
    upper: SectionEnv

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_identical(self) -> "GlobalEnv":
        if self.lower.nodes != self.upper.nodes or self.lower.adjacency != self.upper.adjacency:
            raise ValueError("lower and upper section environments must be identical")
        return self

    @property
    def composite_count(self) -> int:
        return len(self.lower) * len(self.upper)

    def section(self, section_id: int) -> SectionEnv:
        if section_id == 0:
            return self.lower
        if section_id == 1:
            return self.upper
        raise ValueError(f"section must be 0 (lower) or 1 (upper), got {section_id}")

    def composite_id(self, lower_id: int, upper_id: int) -> int:
        return self.lower.check_node(lower_id) * len(self.upper) + self.upper.check_node(upper_id)

    def split_composite(self, composite_id: int) -> Tuple[int, int]:
        if not 0 <= composite_id < self.composite_count:
            raise ValueError(f"composite id {composite_id} out of range")
        return divmod(composite_id, len(self.upper))


@lru_cache(maxsize=None)
def build_section_env(radius: int = LATTICE_RADIUS) -> SectionEnv:
    """Build the diamond lattice ``{(i, j) : |i| + |j| <= radius}``.

    Ids run row-major by ``j`` descending, then ``i`` ascending; radius 5 gives 61 nodes.
    """
    if not 0 <= radius <= LATTICE_RADIUS:
        raise ValueError(f"radius must be in 0..{LATTICE_RADIUS}")
    nodes: List[Node] = []
    for j in range(radius, -radius - 1, -1):
        width = radius - abs(j)
        for i in range(-width, width + 1):
            nodes.append(Node.at(len(nodes), i, j))

    by_coord = {node.coord: node.id for node in nodes}
    adjacency: Dict[int, Tuple[int, ...]] = {}
    for node in nodes:
        i, j = node.coord
        candidates = ((i - 1, j), (i + 1, j), (i, j - 1), (i, j + 1))
        adjacency[node.id] = tuple(sorted(by_coord[c] for c in candidates if c in by_coord))
    return SectionEnv(nodes=tuple(nodes), adjacency=adjacency)


def build_global_env() -> GlobalEnv:
    section = build_section_env()
    return GlobalEnv(lower=section, upper=section)


def euclidean(a: Node, b: Node) -> float:
    """Euclidean distance between two nodes in motor steps."""
    return math.hypot(a.steps[0] - b.steps[0], a.steps[1] - b.steps[1])


def alternative_goals(
    env: SectionEnv, goal: int, k: int = DEFAULT_ALTERNATIVES
) -> List[int]:
    """The ``k`` nodes nearest to ``goal`` (goal excluded), ordered by (distance, id)."""
    goal = env.check_node(goal)
    if not 0 <= k < len(env):
        raise ValueError(f"k must be in 0..{len(env) - 1}, got {k}")
    if k == 0:
        return []

    # Squared integer distances keep ties exact.
    offsets = env.step_array - env.step_array[goal]
    squared = (offsets**2).sum(axis=1)
    ids = np.arange(len(env))
    order = np.lexsort((ids, squared))
    return [int(node_id) for node_id in order if node_id != goal][:k]


__all__ = [
    "DEFAULT_ALTERNATIVES",
    "DUMP_COLUMNS",
    "GlobalEnv",
    "MOTORS_PER_SECTION",
    "NUM_SECTIONS",
    "STEPS_PER_REVOLUTION",
    "STEP_SPACING",
    "SectionEnv",
    "alternative_goals",
    "build_global_env",
    "build_section_env",
    "euclidean",
]
