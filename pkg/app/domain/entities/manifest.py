"""
Corpus entities - manifest entries and geometric transform specifications.
"""
from enum import Enum
from typing import Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.core.config import settings


class ManifestEntry(BaseModel):
    """
    ManifestEntry entity: where one labeled gesture lives in the corpus.

    Attributes:
        clip_id: Unique clip identifier
        source: Frame directory or .strv raw container, relative to the manifest
        start_frame: First frame, 1-based inclusive
        end_frame: Last frame, 1-based inclusive
        label: Gesture label
        line_number: Manifest line the entry came from (not serialized)
    """
    model_config = ConfigDict(
        frozen=True,
        extra="ignore",
        json_schema_extra={
            "example": {
                "clip_id": "Sample0001_003",
                "source": "frames/Sample0001",
                "start_frame": 120,
                "end_frame": 161,
                "label": "vattene"
            }
        },
    )

    clip_id: str = Field(..., min_length=1, description="Clip identifier")
    source: str = Field(..., min_length=1, description="Frame directory or raw container")
    start_frame: int = Field(..., ge=1, description="First frame (1-based)")
    end_frame: int = Field(..., ge=1, description="Last frame (1-based, inclusive)")
    label: Optional[str] = Field(None, description="Gesture label")
    line_number: Optional[int] = Field(None, exclude=True, description="Source line in the manifest")

    @model_validator(mode="after")
    def _check_range(self):
        if self.end_frame < self.start_frame + 1:
            raise ValueError(
                f"end_frame ({self.end_frame}) must be at least start_frame + 1 ({self.start_frame + 1})"
            )
        return self

    @property
    def frame_count(self) -> int:
        return self.end_frame - self.start_frame + 1


class CropMode(str, Enum):
    CENTER = "center"
    RANDOM = "random"


class CropSpec(BaseModel):
    """Crop window of width x height pixels."""
    model_config = ConfigDict(frozen=True)

    mode: CropMode = CropMode.CENTER
    width: int = Field(settings.default_crop[0], ge=1)
    height: int = Field(settings.default_crop[1], ge=1)


class NoiseSpec(BaseModel):
    """Additive Gaussian noise parameters."""
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    mu: float = 0.0
    sigma: float = Field(1.0, ge=0.0)


class TransformSpec(BaseModel):
    """
    TransformSpec entity: geometric preprocessing and augmentation.

    Attributes:
        resize_to: Frame size (width, height) applied before encoding, None keeps the source size
        crop: Crop applied first during augmentation
        hflip_prob: Probability of a horizontal flip
        rotation_degrees: Rotation angle bound, drawn uniformly in [-bound, +bound]
        noise: Additive Gaussian noise, clamped to [0, 255]
    """
    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    resize_to: Optional[Tuple[int, int]] = None
    crop: Optional[CropSpec] = None
    hflip_prob: float = Field(0.0, ge=0.0, le=1.0)
    rotation_degrees: float = Field(0.0, ge=0.0)
    noise: Optional[NoiseSpec] = None

    @model_validator(mode="after")
    def _check_crop_fits(self):
        if self.resize_to is not None:
            width, height = self.resize_to
            if width < 1 or height < 1:
                raise ValueError("resize_to must be positive")
            if self.crop is not None and (self.crop.width > width or self.crop.height > height):
                raise ValueError(
                    f"crop {self.crop.width}x{self.crop.height} does not fit in {width}x{height}"
                )
        return self

    @property
    def is_identity(self) -> bool:
        """True when augmentation leaves an image untouched."""
        return (
            self.crop is None
            and self.hflip_prob == 0.0
            and self.rotation_degrees == 0.0
            and self.noise is None
        )

    @classmethod
    def montalbano_train(cls) -> "TransformSpec":
        """Random crop, horizontal flip, +/-5 degree rotation and N(0, 1) noise."""
        return cls(
            resize_to=settings.default_resize,
            crop=CropSpec(mode=CropMode.RANDOM),
            hflip_prob=0.5,
            rotation_degrees=5.0,
            noise=NoiseSpec(mu=0.0, sigma=1.0),
        )

    @classmethod
    def grit_train(cls) -> "TransformSpec":
        """Random crop only."""
        return cls(resize_to=settings.default_resize, crop=CropSpec(mode=CropMode.RANDOM))

    @classmethod
    def evaluation(cls) -> "TransformSpec":
        """Deterministic center crop used at test time."""
        return cls(resize_to=settings.default_resize, crop=CropSpec(mode=CropMode.CENTER))
