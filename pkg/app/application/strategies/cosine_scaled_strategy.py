"""
Cosine-scaled RGB distance: norm difference weighted by chromatic agreement.
"""
from typing import Optional

import numpy as np

from app.application.strategies.base_strategy import DistanceStrategy
from app.domain.entities import DistanceMetric
from app.domain.services import cosine_scaled_distance_map


class CosineScaledStrategy(DistanceStrategy):
    """(1 - lambda/2) * | ||I_{k-1}|| - ||I_k|| |."""

    metric = DistanceMetric.COSINE_SCALED

    def __init__(self, epsilon: Optional[float] = None):
        """
        Args:
            epsilon: Zero-norm threshold, defaults to settings.cosine_epsilon
        """
        self.epsilon = epsilon

    def pair_distances(self, prev: np.ndarray, curr: np.ndarray) -> np.ndarray:
        return cosine_scaled_distance_map(prev, curr, self.epsilon)
