"""Encoding and fusion strategies."""
from typing import Dict, Type

from app.application.strategies.base_strategy import DistanceStrategy, FusionStrategy
from app.application.strategies.gray_difference_strategy import GrayDifferenceStrategy
from app.application.strategies.euclidean_strategy import EuclideanStrategy
from app.application.strategies.cosine_scaled_strategy import CosineScaledStrategy
from app.application.strategies.fusion_strategies import (
    ConcatenateFusion,
    MaxFusion,
    MeanFusion,
    SoftAttentionFusion,
    SumFusion,
    fuse_with,
    get_fusion_strategy,
)
from app.domain.entities import DistanceMetric

_DISTANCE_STRATEGIES: Dict[DistanceMetric, Type[DistanceStrategy]] = {
    DistanceMetric.ABS_GRAY: GrayDifferenceStrategy,
    DistanceMetric.EUCLIDEAN: EuclideanStrategy,
    DistanceMetric.COSINE_SCALED: CosineScaledStrategy,
}


def get_distance_strategy(metric: DistanceMetric) -> DistanceStrategy:
    """Strategy instance for a distance metric."""
    return _DISTANCE_STRATEGIES[DistanceMetric(metric)]()


__all__ = [
    "DistanceStrategy",
    "FusionStrategy",
    "GrayDifferenceStrategy",
    "EuclideanStrategy",
    "CosineScaledStrategy",
    "SoftAttentionFusion",
    "SumFusion",
    "MeanFusion",
    "MaxFusion",
    "ConcatenateFusion",
    "get_distance_strategy",
    "get_fusion_strategy",
    "fuse_with",
]
