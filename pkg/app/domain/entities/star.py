"""
Star image entities - the condensed outputs of a clip.
"""
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.exceptions import DimensionMismatchError
from app.domain.entities.arrays import readonly_float_array
from app.domain.entities.encode_config import DistanceMetric


class AccumulationMatrix(BaseModel):
    """
    AccumulationMatrix entity: a nonnegative (height, width) matrix M.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    data: np.ndarray = Field(..., description="(height, width) float64, all >= 0")

    @field_validator("data", mode="before")
    @classmethod
    def _coerce(cls, value):
        return readonly_float_array(value, ndim=2, name="accumulation matrix", nonnegative=True)

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.height, self.width

    def max(self) -> float:
        return float(self.data.max())


class GradientMatrix(BaseModel):
    """
    GradientMatrix entity: a signed (height, width) matrix, e.g. a Sobel response.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    data: np.ndarray = Field(..., description="(height, width) float64, signed")

    @field_validator("data", mode="before")
    @classmethod
    def _coerce(cls, value):
        return readonly_float_array(value, ndim=2, name="gradient matrix")

    @property
    def shape(self) -> Tuple[int, int]:
        return int(self.data.shape[0]), int(self.data.shape[1])


class SegmentRange(BaseModel):
    """1-based inclusive frame-index range of one sub-video."""
    model_config = ConfigDict(frozen=True)

    start: int = Field(..., ge=1)
    end: int = Field(..., ge=1)

    @property
    def length(self) -> int:
        return self.end - self.start + 1

    def as_list(self):
        return [self.start, self.end]


class StarGray(BaseModel):
    """
    StarGray entity: single-channel star with optional Sobel channels.

    Attributes:
        m: Accumulated distances
        m_x: Sobel response of m along columns
        m_y: Sobel response of m along rows
        clip_id: Source clip
        metric: Metric used for m
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    m: AccumulationMatrix
    m_x: Optional[GradientMatrix] = None
    m_y: Optional[GradientMatrix] = None
    clip_id: str = "clip"
    metric: DistanceMetric = DistanceMetric.ABS_GRAY

    @model_validator(mode="after")
    def _check_dimensions(self):
        for name in ("m_x", "m_y"):
            channel = getattr(self, name)
            if channel is not None and channel.shape != self.m.shape:
                raise DimensionMismatchError(
                    f"{name} is {channel.shape}, expected {self.m.shape}",
                    {"channel": name}
                )
        return self

    @property
    def has_gradients(self) -> bool:
        return self.m_x is not None and self.m_y is not None


class StarRgb(BaseModel):
    """
    StarRgb entity: pre-stroke, stroke and post-stroke accumulations as R, G, B.

    Attributes:
        r: Accumulation of the first sub-video
        g: Accumulation of the middle sub-video
        b: Accumulation of the last sub-video
        segment_bounds: Frame ranges of the three sub-videos
        clip_id: Source clip
        metric: Metric used for the accumulations
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    r: AccumulationMatrix
    g: AccumulationMatrix
    b: AccumulationMatrix
    segment_bounds: Tuple[SegmentRange, SegmentRange, SegmentRange]
    clip_id: str = "clip"
    metric: DistanceMetric = DistanceMetric.COSINE_SCALED

    @model_validator(mode="after")
    def _check_channels(self):
        if not (self.r.shape == self.g.shape == self.b.shape):
            raise DimensionMismatchError(
                "StarRgb channels must share dimensions",
                {"r": self.r.shape, "g": self.g.shape, "b": self.b.shape}
            )
        first, middle, last = self.segment_bounds
        if first.start != 1 or middle.start != first.end + 1 or last.start != middle.end + 1:
            raise ValueError("segment ranges must be contiguous and start at frame 1")
        if first.length != last.length:
            raise ValueError("first and last segments must have equal length")
        return self

    @property
    def shape(self) -> Tuple[int, int]:
        return self.r.shape

    @property
    def frame_count(self) -> int:
        return self.segment_bounds[2].end

    def as_array(self) -> np.ndarray:
        """(height, width, 3) array in R, G, B order."""
        return np.stack([self.r.data, self.g.data, self.b.data], axis=-1)

    def swap_red_blue(self) -> "StarRgb":
        """The same image with R and B exchanged."""
        return self.model_copy(update={"r": self.b, "b": self.r})
