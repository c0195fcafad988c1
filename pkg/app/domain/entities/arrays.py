"""
Array coercion shared by the image and feature entities.
Entities hold read-only float64 numpy arrays so they stay immutable after construction.
"""
from typing import Any

import numpy as np


def readonly_float_array(value: Any, ndim: int, name: str, nonnegative: bool = False) -> np.ndarray:
    """
    Coerce a value into a read-only, C-contiguous float64 array.

    Args:
        value: Array-like input
        ndim: Required number of dimensions
        name: Field name used in error messages
        nonnegative: Reject negative entries when True

    Returns:
        A private read-only copy of the data

    Raises:
        ValueError: If the shape or values are invalid
    """
    array = np.array(value, dtype=np.float64, copy=True, order="C")
    if array.ndim != ndim:
        raise ValueError(f"{name} must have {ndim} dimensions, got shape {array.shape}")
    if array.size == 0:
        raise ValueError(f"{name} must not be empty")
    if not np.isfinite(array).all():
        raise ValueError(f"{name} contains non-finite values")
    if nonnegative and (array < 0).any():
        raise ValueError(f"{name} contains negative values")
    array.flags.writeable = False
    return array
