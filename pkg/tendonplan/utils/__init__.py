import sys
from typing import List, Optional, Sequence

import numpy as np

from .logging import logger


def derive_seed(base: Optional[int], *keys: int) -> int:
    """Derive an independent 32-bit seed for a (group, repetition, ...) cell.

    A ``None`` base draws fresh OS entropy, so unseeded runs stay unseeded.
    """
    if base is None:
        return int(np.random.SeedSequence().generate_state(1)[0])
    return int(np.random.SeedSequence([base, *keys]).generate_state(1)[0])


def format_path(nodes: Sequence[int]) -> str:
    return "-".join(str(n) for n in nodes)


def parse_id_list(text: str) -> List[int]:
    """Parse ``"1,2,3"`` (spaces allowed) into a list of ints."""
    items = [item.strip() for item in text.split(",") if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError as e:
        raise ValueError(f"Expected comma-separated integers, got {text!r}") from e


def write_text(text: str, out: str) -> None:
    """Write ``text`` to the file ``out``, or to standard output when ``out`` is ``-``."""
    if out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info("output.written", out=out, size=len(text))


__all__ = ["derive_seed", "format_path", "logger", "parse_id_list", "write_text"]
