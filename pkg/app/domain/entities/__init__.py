"""Domain entities."""
from app.domain.entities.pixel import Pixel
from app.domain.entities.frame import Frame, ClipSource
from app.domain.entities.encode_config import (
    DistanceMetric,
    EncodeConfig,
    Normalization,
    Representation,
)
from app.domain.entities.star import (
    AccumulationMatrix,
    GradientMatrix,
    SegmentRange,
    StarGray,
    StarRgb,
)
from app.domain.entities.distance import DistanceBreakdown
from app.domain.entities.fusion import FeatureVector, FusionMode, FusionResult, ScorerParams
from app.domain.entities.manifest import CropMode, CropSpec, ManifestEntry, NoiseSpec, TransformSpec

__all__ = [
    "Pixel",
    "Frame",
    "ClipSource",
    "DistanceMetric",
    "EncodeConfig",
    "Normalization",
    "Representation",
    "AccumulationMatrix",
    "GradientMatrix",
    "SegmentRange",
    "StarGray",
    "StarRgb",
    "DistanceBreakdown",
    "FeatureVector",
    "FusionMode",
    "FusionResult",
    "ScorerParams",
    "CropMode",
    "CropSpec",
    "ManifestEntry",
    "NoiseSpec",
    "TransformSpec",
]
