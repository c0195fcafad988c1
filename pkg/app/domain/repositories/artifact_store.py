"""
Artifact store interface for encoded images, sidecars and fusion parameters.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Tuple

import numpy as np

from app.domain.entities import FeatureVector, ScorerParams


class IArtifactStore(ABC):
    """
    Interface for persisting and reading encoder and fusion artifacts.
    """

    @abstractmethod
    def write_png(self, path: str, image: np.ndarray) -> str:
        """Write a (height, width, C) uint8 image, C in {1, 3}."""
        pass

    @abstractmethod
    def write_sidecar(self, path: str, planes: np.ndarray, header: Dict[str, Any]) -> str:
        """Write (height, width, C) float planes with a JSON header line."""
        pass

    @abstractmethod
    def read_sidecar(self, path: str) -> Tuple[Dict[str, Any], np.ndarray]:
        """Read a sidecar back as (header, (height, width, C) float64 planes)."""
        pass

    @abstractmethod
    def read_image(self, path: str) -> Tuple[Dict[str, Any], np.ndarray]:
        """
        Read a float image for comparison.

        Sidecars are preferred: a PNG path with a sibling .star file of the
        same shape, written without augmentation, is read from the sidecar.
        """
        pass

    @abstractmethod
    def write_json(self, path: str, document: Dict[str, Any]) -> str:
        """Write a JSON document with sorted keys."""
        pass

    @abstractmethod
    def load_params(self, path: str) -> ScorerParams:
        """Read scorer parameters."""
        pass

    @abstractmethod
    def save_params(self, path: str, params: ScorerParams) -> str:
        """Write scorer parameters."""
        pass

    @abstractmethod
    def load_feature_vector(self, path: str) -> FeatureVector:
        """Read a feature vector from a JSON array or a sidecar."""
        pass
