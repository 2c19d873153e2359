from .ahp import (
    DEFAULT_IMPORTANCE,
    GROUP_PRIORITIES,
    RANDOM_INDEX,
    Consistency,
    PairwiseMatrix,
    consistency,
    group_for_priorities,
    group_weights,
    matrix_from_priorities,
    principal_eigenvector,
    weights,
)

__all__ = [
    "Consistency",
    "DEFAULT_IMPORTANCE",
    "GROUP_PRIORITIES",
    "PairwiseMatrix",
    "RANDOM_INDEX",
    "consistency",
    "group_for_priorities",
    "group_weights",
    "matrix_from_priorities",
    "principal_eigenvector",
    "weights",
]
