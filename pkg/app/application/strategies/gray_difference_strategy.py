"""
Absolute grayscale difference, the original star accumulation term.
"""
import numpy as np

from app.application.strategies.base_strategy import DistanceStrategy
from app.domain.entities import DistanceMetric
from app.domain.services import gray_difference_map


class GrayDifferenceStrategy(DistanceStrategy):
    """|I_{k-1} - I_k| on BT.601 luminance."""

    metric = DistanceMetric.ABS_GRAY

    def pair_distances(self, prev: np.ndarray, curr: np.ndarray) -> np.ndarray:
        return gray_difference_map(prev, curr)
