import math
from typing import Dict, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from tendonplan.errors import ConvergenceError
from tendonplan.types.weights import CRITERIA, CriteriaWeights
from tendonplan.utils import logger

DEFAULT_IMPORTANCE: int = 9
POWER_ITERATION_TOL: float = 1e-12
POWER_ITERATION_MAX_ITER: int = 1000
RECIPROCITY_TOL: float = 1e-12

SAATY_SCALE: Tuple[int, ...] = (1, 2, 3, 4, 5, 6, 7, 8, 9)

# Saaty's random consistency index by matrix order.
RANDOM_INDEX: Dict[int, float] = {
    1: 0.00,
    2: 0.00,
    3: 0.58,
    4: 0.90,
    5: 1.12,
    6: 1.24,
    7: 1.32,
    8: 1.41,
    9: 1.45,
    10: 1.49,
}

# Prioritized criteria per group, in (distance, motor damage, mechanical damage, accuracy) order.
GROUP_PRIORITIES: Dict[int, Tuple[bool, bool, bool, bool]] = {
    1: (True, False, False, False),
    2: (False, True, False, False),
    3: (False, False, True, False),
    4: (False, False, False, True),
    5: (True, True, False, False),
    6: (True, False, True, False),
    7: (True, False, False, True),
    8: (False, True, True, False),
    9: (False, True, False, True),
    10: (False, False, True, True),
    11: (True, True, True, False),
    12: (True, True, False, True),
    13: (True, False, True, True),
    14: (False, True, True, True),
    15: (True, True, True, True),
}


def _on_scale(value: float) -> bool:
    return any(
        math.isclose(value, s, rel_tol=1e-9) or math.isclose(value, 1.0 / s, rel_tol=1e-9)
        for s in SAATY_SCALE
    )


class PairwiseMatrix(BaseModel):
    """
    A reciprocal pairwise comparison matrix on the Saaty scale.

    ``a[i][j]`` says how much more important criterion ``i`` is than criterion ``j``.
    """

    a: Tuple[Tuple[float, ...], ...]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_matrix(self) -> "PairwiseMatrix":
        n = len(self.a)
        if n == 0 or any(len(row) != n for row in self.a):
            raise ValueError("pairwise matrix must be square and non-empty")
        for i in range(n):
            if self.a[i][i] != 1:
                raise ValueError(f"diagonal entry a[{i}][{i}] must be 1")
            for j in range(n):
                value = self.a[i][j]
                if value <= 0:
                    raise ValueError(f"entry a[{i}][{j}] must be positive")
                if not _on_scale(value):
                    raise ValueError(f"entry a[{i}][{j}]={value} is not on the Saaty scale")
                if abs(self.a[j][i] - 1.0 / value) > RECIPROCITY_TOL:
                    raise ValueError(f"a[{j}][{i}] is not the reciprocal of a[{i}][{j}]")
        return self

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.a, dtype=float)

    @classmethod
    def from_array(cls, values: Sequence[Sequence[float]]) -> "PairwiseMatrix":
        return cls(a=tuple(tuple(float(x) for x in row) for row in values))


class Consistency(BaseModel):
    """
    AHP consistency measures.

    Attributes:
        ci (float): Consistency index ``(lambda_max - n) / (n - 1)``.
        cr (Optional[float]): Consistency ratio ``ci / RI(n)``; ``None`` when n < 3.
        lambda_max (float): Principal eigenvalue estimate.
    """

    ci: float
    cr: Optional[float]
    lambda_max: float

    model_config = ConfigDict(frozen=True)

    @property
    def is_consistent(self) -> bool:
        return self.cr is None or self.cr < 0.1


def matrix_from_priorities(
    prioritized: Sequence[bool], importance: int = DEFAULT_IMPORTANCE
) -> PairwiseMatrix:
    """Comparison matrix where every prioritized criterion beats every other one by ``importance``."""
    if importance not in SAATY_SCALE:
        raise ValueError(f"importance must be one of {SAATY_SCALE}, got {importance}")
    flags = [bool(x) for x in prioritized]
    rows = []
    for fi in flags:
        row = []
        for fj in flags:
            if fi and not fj:
                row.append(float(importance))
            elif fj and not fi:
                row.append(1.0 / importance)
            else:
                row.append(1.0)
        rows.append(tuple(row))
    return PairwiseMatrix(a=tuple(rows))


def principal_eigenvector(
    m: PairwiseMatrix,
    tol: float = POWER_ITERATION_TOL,
    max_iter: int = POWER_ITERATION_MAX_ITER,
) -> np.ndarray:
    """Normalized principal eigenvector of ``m`` by power iteration."""
    a = m.array
    w = np.full(m.n, 1.0 / m.n)
    for iteration in range(1, max_iter + 1):
        nxt = a @ w
        nxt /= nxt.sum()
        if np.max(np.abs(nxt - w)) < tol:
            logger.debug("ahp.converged", iterations=iteration, n=m.n)
            return nxt
        w = nxt
    raise ConvergenceError(f"power iteration did not converge in {max_iter} iterations")


def weights(m: PairwiseMatrix, group_index: Optional[int] = None) -> CriteriaWeights:
    if m.n != len(CRITERIA):
        raise ValueError(f"criteria weights need a {len(CRITERIA)}x{len(CRITERIA)} matrix, got n={m.n}")
    w = principal_eigenvector(m)
    # Re-normalize in plain floats so the sum-to-one check is exact enough.
    values = [float(x) for x in w]
    total = math.fsum(values)
    return CriteriaWeights.from_sequence([x / total for x in values], group_index=group_index)


def consistency(m: PairwiseMatrix) -> Consistency:
    a = m.array
    w = principal_eigenvector(m)
    lambda_max = float(np.mean((a @ w) / w))
    n = m.n
    ci = (lambda_max - n) / (n - 1) if n > 1 else 0.0
    cr = ci / RANDOM_INDEX.get(n, RANDOM_INDEX[10]) if n >= 3 else None
    return Consistency(ci=ci, cr=cr, lambda_max=lambda_max)


def group_weights(
    group_index: int,
    raw_equal_weights: bool = False,
    importance: int = DEFAULT_IMPORTANCE,
) -> CriteriaWeights:
    """Weights of one of the 15 criteria groups.

    With ``raw_equal_weights`` group 15 yields unit weights (1, 1, 1, 1) instead of 0.25 each.
    """
    if group_index not in GROUP_PRIORITIES:
        raise ValueError(f"group index must be in 1..15, got {group_index}")
    if group_index == 15 and raw_equal_weights:
        return CriteriaWeights.from_sequence([1.0] * 4, group_index=15, normalized=False)
    return weights(
        matrix_from_priorities(GROUP_PRIORITIES[group_index], importance),
        group_index=group_index,
    )


def group_for_priorities(prioritized: Sequence[bool]) -> int:
    flags = tuple(bool(x) for x in prioritized)
    if len(flags) != len(CRITERIA):
        raise ValueError(f"expected {len(CRITERIA)} priority flags, got {len(flags)}")
    if not any(flags):
        return 15
    for group, row in GROUP_PRIORITIES.items():
        if row == flags:
            return group
    raise AssertionError("unreachable: every non-empty flag set is a group")
