from .section_env import (
    DEFAULT_ALTERNATIVES,
    DUMP_COLUMNS,
    MOTORS_PER_SECTION,
    NUM_SECTIONS,
    STEPS_PER_REVOLUTION,
    GlobalEnv,
    SectionEnv,
    alternative_goals,
    build_global_env,
    build_section_env,
    euclidean,
)

__all__ = [
    "DEFAULT_ALTERNATIVES",
    "DUMP_COLUMNS",
    "GlobalEnv",
    "MOTORS_PER_SECTION",
    "NUM_SECTIONS",
    "STEPS_PER_REVOLUTION",
    "SectionEnv",
    "alternative_goals",
    "build_global_env",
    "build_section_env",
    "euclidean",
]
