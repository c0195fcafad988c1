"""
EncodeConfig entity - how a clip is condensed into a star image.
"""
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.exceptions import InvalidEncodeConfigError


class DistanceMetric(str, Enum):
    """Per-pixel distance between consecutive frames."""
    ABS_GRAY = "abs_gray"
    EUCLIDEAN = "euclidean"
    COSINE_SCALED = "cosine_scaled"


class Normalization(str, Enum):
    """Export normalisation to 8 bits."""
    GLOBAL_MAX = "global_max"
    PER_CHANNEL_MAX = "per_channel_max"
    NONE = "none"


class Representation(str, Enum):
    """Output image family."""
    STAR_RGB = "star_rgb"
    STAR_GRAY = "star_gray"


class EncodeConfig(BaseModel):
    """
    EncodeConfig entity.

    Attributes:
        representation: star_rgb (tri-split) or star_gray (single channel)
        metric: Distance accumulated over consecutive frame pairs
        weighted_shadow: Multiply the k-th term by k/N (legacy mode only)
        sobel_channels: Emit Sobel X/Y gradients of M (legacy mode only)
        normalization: Export normalisation
    """
    model_config = ConfigDict(
        frozen=True,
        json_schema_extra={
            "example": {
                "representation": "star_rgb",
                "metric": "cosine_scaled",
                "weighted_shadow": False,
                "sobel_channels": False,
                "normalization": "global_max"
            }
        },
    )

    representation: Representation = Field(Representation.STAR_RGB, description="Output family")
    metric: DistanceMetric = Field(DistanceMetric.COSINE_SCALED, description="Pixel distance")
    weighted_shadow: bool = Field(False, description="Apply W_s = k/N")
    sobel_channels: bool = Field(False, description="Emit Sobel gradients")
    normalization: Normalization = Field(Normalization.GLOBAL_MAX, description="Export normalisation")

    @model_validator(mode="after")
    def _check_legacy_options(self):
        legacy_only = self.weighted_shadow or self.sobel_channels
        if legacy_only and self.metric != DistanceMetric.ABS_GRAY:
            raise InvalidEncodeConfigError(
                "weighted_shadow and sobel_channels require metric abs_gray",
                {"metric": self.metric.value}
            )
        if legacy_only and self.representation != Representation.STAR_GRAY:
            raise InvalidEncodeConfigError(
                "weighted_shadow and sobel_channels are only available for the single-channel star",
                {"representation": self.representation.value}
            )
        return self
