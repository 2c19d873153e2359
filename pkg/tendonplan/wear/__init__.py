from .storage import (
    JsonWearStore,
    SqlWearStore,
    WearStore,
    dumps,
    load,
    open_store,
    save,
)
from .wear_state import NUM_MOTORS, WearState, apply_path, motor_for, segment_key

__all__ = [
    "JsonWearStore",
    "NUM_MOTORS",
    "SqlWearStore",
    "WearState",
    "WearStore",
    "apply_path",
    "dumps",
    "load",
    "motor_for",
    "open_store",
    "save",
    "segment_key",
]
