"""
Euclidean RGB distance.
"""
import numpy as np

from app.application.strategies.base_strategy import DistanceStrategy
from app.domain.entities import DistanceMetric
from app.domain.services import euclidean_distance_map


class EuclideanStrategy(DistanceStrategy):
    """||I_{k-1} - I_k||_2 on the RGB vectors."""

    metric = DistanceMetric.EUCLIDEAN

    def pair_distances(self, prev: np.ndarray, curr: np.ndarray) -> np.ndarray:
        return euclidean_distance_map(prev, curr)
