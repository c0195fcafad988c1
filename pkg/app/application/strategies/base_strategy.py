"""
Base strategies for star encoding and feature fusion.
Strategy Pattern: metrics and fusion modes are swapped without touching callers.
"""
from abc import ABC, abstractmethod
from typing import Optional, Sequence

import numpy as np

from app.domain.entities import DistanceMetric, FeatureVector, FusionMode, FusionResult, ScorerParams


class DistanceStrategy(ABC):
    """
    Abstract base class for consecutive-frame distance metrics.

    Implementations map two stacks of frames to per-pixel distances.
    """

    metric: DistanceMetric

    @abstractmethod
    def pair_distances(self, prev: np.ndarray, curr: np.ndarray) -> np.ndarray:
        """
        Distance between aligned frames.

        Args:
            prev: (..., height, width, 3) earlier frames
            curr: (..., height, width, 3) later frames, same shape

        Returns:
            (..., height, width) nonnegative distances
        """
        pass

    def get_strategy_name(self) -> str:
        """Metric name used in logs and sidecar headers."""
        return self.metric.value


class FusionStrategy(ABC):
    """
    Abstract base class for combining N_CNN equal-length feature vectors.
    """

    mode: FusionMode

    @abstractmethod
    def fuse(self, maps: Sequence[FeatureVector], params: Optional[ScorerParams] = None) -> FusionResult:
        """
        Combine the feature vectors.

        Args:
            maps: Equal-length feature vectors, at least two
            params: Scorer parameters, used only by attention-based modes

        Raises:
            InvalidFeatureError: If fewer than two maps are given
            DimensionMismatchError: If the maps differ in length
        """
        pass

    def requires_params(self) -> bool:
        """True when the strategy needs ScorerParams."""
        return False

    def get_strategy_name(self) -> str:
        return self.mode.value
