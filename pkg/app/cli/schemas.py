"""
CLI configuration schema.
Validated view of the parsed command line, mapped onto domain configuration.
"""
import os
from enum import Enum
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from app.core.config import settings
from app.core.exceptions import InvalidEncodeConfigError, InvalidInputError, StorageError
from app.domain.entities import (
    DistanceMetric,
    EncodeConfig,
    FusionMode,
    Normalization,
    Representation,
    TransformSpec,
)

METRIC_CHOICES = {
    "abs-gray": DistanceMetric.ABS_GRAY,
    "euclidean": DistanceMetric.EUCLIDEAN,
    "cosine": DistanceMetric.COSINE_SCALED,
}

NORMALIZE_CHOICES = {
    "global": Normalization.GLOBAL_MAX,
    "per-channel": Normalization.PER_CHANNEL_MAX,
    "none": Normalization.NONE,
}

AUGMENT_PRESETS = {
    "montalbano": TransformSpec.montalbano_train,
    "grit": TransformSpec.grit_train,
    "evaluation": TransformSpec.evaluation,
}

FUSION_MODE_CHOICES = {mode.value.replace("_", "-"): mode for mode in FusionMode}


class Command(str, Enum):
    ENCODE = "encode"
    BATCH = "batch"
    SEGMENT = "segment"
    COMPARE = "compare"
    FUSE = "fuse"


class CliConfig(BaseModel):
    """
    Command-line configuration.

    Fields not used by a command keep their defaults.
    """
    command: Command
    out: Optional[str] = Field(None, description="Output directory")
    manifest: Optional[str] = Field(None, description="JSON-Lines manifest")
    source: Optional[str] = Field(None, description="Frame directory or raw container")
    clip_id: Optional[str] = None

    # Encoding
    metric: Optional[str] = Field(None, description="abs-gray, euclidean or cosine")
    star_rgb: bool = False
    legacy: bool = False
    weighted_shadow: bool = False
    sobel: bool = False
    normalize: str = "global"
    reverse: bool = False
    resize: Optional[Tuple[int, int]] = None
    augment: str = "none"

    # Execution
    jobs: int = Field(settings.default_jobs, ge=1, description="Worker processes")
    seed: int = Field(settings.default_seed, ge=0, description="Seed for augmentation and scorer init")

    # Diagnostics and fusion
    images: List[str] = Field(default_factory=list)
    swap_rb: bool = False
    vectors: List[str] = Field(default_factory=list)
    params: Optional[str] = None
    write_params: Optional[str] = None
    mode: str = "soft-attention"

    @classmethod
    def from_namespace(cls, namespace) -> "CliConfig":
        """
        Build from an argparse namespace.

        Raises:
            InvalidInputError: If a value is out of range
        """
        try:
            return cls.model_validate({k: v for k, v in vars(namespace).items() if v is not None})
        except ValidationError as e:
            problems = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
            raise InvalidInputError(f"Invalid arguments: {problems}")

    def encode_config(self) -> EncodeConfig:
        """
        Encoder configuration implied by the flags.

        --weighted-shadow and --sobel imply --legacy. The default metric is
        cosine for star RGB and abs-gray for the legacy star.

        Raises:
            InvalidEncodeConfigError: If the flags conflict
        """
        legacy = self.legacy or self.weighted_shadow or self.sobel
        if legacy and self.star_rgb:
            raise InvalidEncodeConfigError("--weighted-shadow and --sobel cannot be combined with --star-rgb")

        if self.metric is not None:
            metric = METRIC_CHOICES[self.metric]
        else:
            metric = DistanceMetric.ABS_GRAY if legacy else DistanceMetric.COSINE_SCALED

        return EncodeConfig(
            representation=Representation.STAR_GRAY if legacy else Representation.STAR_RGB,
            metric=metric,
            weighted_shadow=self.weighted_shadow,
            sobel_channels=self.sobel,
            normalization=NORMALIZE_CHOICES[self.normalize],
        )

    def transform_spec(self) -> TransformSpec:
        """
        Preprocessing and augmentation implied by --resize and --augment.

        An explicit --resize overrides the preset frame size.

        Raises:
            InvalidInputError: If the crop does not fit the frame size
        """
        if self.augment == "none":
            base = {}
        else:
            base = AUGMENT_PRESETS[self.augment]().model_dump()
        if self.resize is not None:
            base["resize_to"] = self.resize
        try:
            return TransformSpec.model_validate(base)
        except ValidationError as e:
            raise InvalidInputError(f"Invalid transform: {e.errors()[0]['msg']}", {"augment": self.augment})

    def fusion_mode(self) -> FusionMode:
        return FUSION_MODE_CHOICES[self.mode]


def ensure_output_dir(path: str) -> Path:
    """
    Create the output directory and check it is writable before any work starts.

    Raises:
        StorageError: If the directory cannot be created or written
    """
    target = Path(path)
    try:
        target.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise StorageError(f"Cannot create output directory {target}: {e}", {"out": str(target)})
    if not target.is_dir() or not os.access(target, os.W_OK):
        raise StorageError(f"Output directory {target} is not writable", {"out": str(target)})
    return target
