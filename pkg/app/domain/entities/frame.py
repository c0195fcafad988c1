"""
Frame and ClipSource entities - the raw material of every encoding.
Frames are stored as (height, width, 3) float64 arrays indexed [row, column, channel].
"""
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.core.exceptions import ClipTooShortError, DimensionMismatchError
from app.domain.entities.arrays import readonly_float_array


class Frame(BaseModel):
    """
    Frame entity: one RGB video frame.

    Attributes:
        data: Row-major (height, width, 3) grid of nonnegative channel intensities
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    data: np.ndarray = Field(..., description="(height, width, 3) float64 pixels")

    @field_validator("data", mode="before")
    @classmethod
    def _coerce(cls, value):
        array = readonly_float_array(value, ndim=3, name="frame data", nonnegative=True)
        if array.shape[2] != 3:
            raise ValueError(f"frame data must have 3 channels, got {array.shape[2]}")
        return array

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Tuple[int, int]:
        """(height, width)."""
        return self.height, self.width


class ClipSource(BaseModel):
    """
    ClipSource entity: the ordered frames of one gesture clip.

    Attributes:
        frames: Frames in temporal order, all with identical dimensions
        clip_id: Identifier used for output naming and seed derivation
        label: Optional gesture label
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    frames: Tuple[Frame, ...] = Field(..., description="Ordered frames")
    clip_id: str = Field("clip", description="Clip identifier")
    label: Optional[str] = Field(None, description="Gesture label")

    @model_validator(mode="after")
    def _check_frames(self):
        if len(self.frames) < 2:
            raise ClipTooShortError(
                f"Clip '{self.clip_id}' has {len(self.frames)} frame(s); at least 2 are required",
                {"clip_id": self.clip_id, "frames": len(self.frames)}
            )
        first = self.frames[0].shape
        for index, frame in enumerate(self.frames, start=1):
            if frame.shape != first:
                raise DimensionMismatchError(
                    f"Frame {index} of clip '{self.clip_id}' is {frame.width}x{frame.height}, "
                    f"expected {first[1]}x{first[0]}",
                    {"clip_id": self.clip_id, "frame": index}
                )
        return self

    @property
    def frame_count(self) -> int:
        return len(self.frames)

    @property
    def shape(self) -> Tuple[int, int]:
        """(height, width) shared by all frames."""
        return self.frames[0].shape

    def stack(self) -> np.ndarray:
        """All frames as one (N, height, width, 3) array."""
        return np.stack([frame.data for frame in self.frames])

    @classmethod
    def from_array(cls, frames: np.ndarray, clip_id: str = "clip", label: Optional[str] = None) -> "ClipSource":
        """Build a clip from an (N, height, width, 3) array."""
        return cls(frames=tuple(Frame(data=f) for f in np.asarray(frames)), clip_id=clip_id, label=label)
