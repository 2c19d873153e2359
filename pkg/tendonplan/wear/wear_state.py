from typing import Dict, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from tendonplan.env import MOTORS_PER_SECTION, NUM_SECTIONS, SectionEnv, build_section_env
from tendonplan.errors import InvalidPathError
from tendonplan.types.node import STEP_SPACING
from tendonplan.types.path import Path

NUM_MOTORS: int = NUM_SECTIONS * MOTORS_PER_SECTION


def motor_for(section: int, axis: int) -> int:
    """Motor ``2k`` drives the X axis of section ``k``, motor ``2k + 1`` its Y axis."""
    if section not in range(NUM_SECTIONS) or axis not in range(MOTORS_PER_SECTION):
        raise ValueError(f"no motor for section {section}, axis {axis}")
    return MOTORS_PER_SECTION * section + axis


def segment_key(section: int, a: int, b: int) -> Tuple[int, int, int]:
    return (section, min(a, b), max(a, b))


class WearState(BaseModel):
    """
    Accumulated wear of the robot.

    Attributes:
        motor_steps (Dict[int, int]): Steps made by each of the four motors.
        segment_use (Dict[Tuple[int, int, int], int]): Traversals per
            ``(section, low id, high id)`` tendon segment.
    """

    motor_steps: Dict[int, int] = Field(
        default_factory=lambda: {m: 0 for m in range(NUM_MOTORS)}
    )
    segment_use: Dict[Tuple[int, int, int], int] = Field(default_factory=dict)

    model_config = ConfigDict(frozen=True)

    @field_validator("motor_steps")
    @classmethod
    def _check_motors(cls, value: Dict[int, int]) -> Dict[int, int]:
        if set(value) != set(range(NUM_MOTORS)):
            raise ValueError(f"motor_steps must have exactly motors 0..{NUM_MOTORS - 1}")
        if any(steps < 0 for steps in value.values()):
            raise ValueError("motor step counts must be non-negative")
        return dict(sorted(value.items()))

    @model_validator(mode="after")
    def _check_segments(self) -> "WearState":
        env = build_section_env()
        for (section, a, b), count in self.segment_use.items():
            if section not in range(NUM_SECTIONS):
                raise ValueError(f"segment section {section} out of range")
            if a >= b or not env.is_adjacent(a, b):
                raise ValueError(f"segment ({a}, {b}) is not an adjacent low-high pair")
            if count < 0:
                raise ValueError(f"segment ({section}, {a}, {b}) has negative count")
        return self

    @classmethod
    def zero(cls) -> "WearState":
        return cls()

    @classmethod
    def random(
        cls,
        seed: Optional[int] = None,
        env: Optional[SectionEnv] = None,
        max_steps: int = 80_000,
        max_uses: int = 100,
    ) -> "WearState":
        """A random wear snapshot for experiments; every segment of both sections gets a count."""
        env = env or build_section_env()
        rng = np.random.default_rng(seed)
        motors = {m: int(rng.integers(0, max_steps + 1)) for m in range(NUM_MOTORS)}
        segments = {}
        for section in range(NUM_SECTIONS):
            for a in range(len(env)):
                for b in env.neighbors(a):
                    if a < b:
                        segments[(section, a, b)] = int(rng.integers(0, max_uses + 1))
        return cls(motor_steps=motors, segment_use=segments)

    def motor(self, motor_id: int) -> int:
        return self.motor_steps[motor_id]

    def segment_count(self, section: int, a: int, b: int) -> int:
        return self.segment_use.get(segment_key(section, a, b), 0)

    @property
    def total_steps(self) -> int:
        return sum(self.motor_steps.values())


def apply_path(
    state: WearState,
    section: int,
    path: Union[Path, Sequence[int]],
    env: Optional[SectionEnv] = None,
) -> WearState:
    """Return the wear after the section follows ``path``; ``state`` is left untouched."""
    env = env or build_section_env()
    if section not in range(NUM_SECTIONS):
        raise InvalidPathError(f"section must be 0..{NUM_SECTIONS - 1}, got {section}")
    if isinstance(path, Path) and path.section != section:
        raise InvalidPathError(f"path belongs to section {path.section}, not {section}")
    nodes = env.validate_path(path)

    motors = dict(state.motor_steps)
    segments = dict(state.segment_use)
    for a, b in zip(nodes, nodes[1:]):
        motors[motor_for(section, env.axis(a, b))] += STEP_SPACING
        key = segment_key(section, a, b)
        segments[key] = segments.get(key, 0) + 1
    return WearState(motor_steps=motors, segment_use=segments)
