from typing import Tuple

from pydantic import BaseModel, ConfigDict, model_validator

LATTICE_RADIUS: int = 5
STEP_SPACING: int = 70


class Node(BaseModel):
    """A reachable lattice point of one section.

    Attributes:
        id (int): Rank of the node in the canonical ordering.
        coord (Tuple[int, int]): Signed lattice coordinates ``(i, j)``.
        steps (Tuple[int, int]): Motor-step position ``(x_steps, y_steps)``.
    """

    id: int
    coord: Tuple[int, int]
    steps: Tuple[int, int]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_lattice(self) -> "Node":
        i, j = self.coord
        if abs(i) + abs(j) > LATTICE_RADIUS:
            raise ValueError(f"coord {self.coord} lies outside the lattice radius")
        if self.steps != (STEP_SPACING * i, STEP_SPACING * j):
            raise ValueError(f"steps {self.steps} do not match coord {self.coord}")
        return self

    @classmethod
    def at(cls, id: int, i: int, j: int) -> "Node":
        return cls(id=id, coord=(i, j), steps=(STEP_SPACING * i, STEP_SPACING * j))
