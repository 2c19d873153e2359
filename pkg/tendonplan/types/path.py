from typing import Iterator, List, Tuple

from pydantic import BaseModel, ConfigDict, Field


class Path(BaseModel):
    """An ordered node sequence inside one section environment.

    Adjacency is checked against the environment by ``SectionEnv.validate_path``;
    the model itself only knows ids.
    """

    section: int = Field(default=0, ge=0, le=1)
    nodes: Tuple[int, ...] = Field(min_length=1)

    model_config = ConfigDict(frozen=True)

    @property
    def start(self) -> int:
        return self.nodes[0]

    @property
    def end(self) -> int:
        return self.nodes[-1]

    @property
    def num_edges(self) -> int:
        return len(self.nodes) - 1

    def edges(self) -> Iterator[Tuple[int, int]]:
        return zip(self.nodes, self.nodes[1:])

    def to_list(self) -> List[int]:
        return list(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)


class FitnessBreakdown(BaseModel):
    """Per-criterion costs of a path and their weighted total. Lower is better."""

    f_distance: float = Field(ge=0)
    f_motor: float = Field(ge=0)
    f_mech: float = Field(ge=0)
    f_accuracy: float = Field(ge=0)
    total: float

    model_config = ConfigDict(frozen=True)

    def combine(self, other: "FitnessBreakdown") -> "FitnessBreakdown":
        return FitnessBreakdown(
            f_distance=self.f_distance + other.f_distance,
            f_motor=self.f_motor + other.f_motor,
            f_mech=self.f_mech + other.f_mech,
            f_accuracy=self.f_accuracy + other.f_accuracy,
            total=self.total + other.total,
        )

    @classmethod
    def zero(cls) -> "FitnessBreakdown":
        return cls(f_distance=0.0, f_motor=0.0, f_mech=0.0, f_accuracy=0.0, total=0.0)
