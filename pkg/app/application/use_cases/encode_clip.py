"""
Encode Clip Use Case.
Loads one clip, condenses it and writes the PNG(s) plus a float sidecar.
"""
from pathlib import Path
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from app.application.services import (
    encode,
    normalize_gradient,
    quantize,
    reverse_clip,
    scale_channels,
    stack_legacy_channels,
)
from app.core.exceptions import InvalidEncodeConfigError
from app.core.logging import log
from app.domain.entities import (
    ClipSource,
    EncodeConfig,
    ManifestEntry,
    StarGray,
    StarRgb,
    TransformSpec,
)
from app.domain.repositories import IArtifactStore, IClipRepository
from app.domain.services import augment, derive_seed, resize


class EncodeRequest(BaseModel):
    """Everything needed to encode one clip."""
    model_config = ConfigDict(frozen=True)

    entry: ManifestEntry
    config: EncodeConfig = Field(default_factory=EncodeConfig)
    out_dir: str
    reverse: bool = False
    transform: TransformSpec = Field(default_factory=TransformSpec)
    transform_name: str = "none"
    seed: int = Field(0, ge=0)


class EncodeSummary(BaseModel):
    """One-line summary printed by the CLI."""
    clip_id: str
    frames: int
    metric: str
    representation: str
    normalization: str
    max_value: float
    reversed: bool = False
    outputs: List[str] = Field(default_factory=list)


class EncodeClipUseCase:
    """
    Use case for encoding a single clip.

    The sidecar holds the raw accumulation; the PNG holds the normalised,
    optionally augmented, 8-bit image.
    """

    def __init__(self, clip_repository: IClipRepository, artifact_store: IArtifactStore):
        """
        Args:
            clip_repository: Source of clips
            artifact_store: Destination of images and sidecars
        """
        self.clip_repo = clip_repository
        self.store = artifact_store

    def execute(self, request: EncodeRequest) -> EncodeSummary:
        """
        Execute the encoding.

        Raises:
            ClipTooShortError: If the clip is too short for the representation
            InvalidEncodeConfigError: If options conflict
            StorageError: If inputs or outputs cannot be accessed
        """
        config = request.config
        log.info(f"Encoding {request.entry.clip_id} as {config.representation.value} ({config.metric.value})")

        if config.sobel_channels and not request.transform.is_identity:
            raise InvalidEncodeConfigError(
                "Augmentation is not supported together with Sobel channels",
                {"transform": request.transform_name}
            )

        clip = self.clip_repo.load_clip(request.entry)
        clip = self._prepare(clip, request)
        star = encode(clip, config)

        base = Path(request.out_dir) / request.entry.clip_id
        header = {
            "clip_id": clip.clip_id,
            "metric": config.metric.value,
            "normalization": config.normalization.value,
            "kind": config.representation.value,
            "reversed": request.reverse,
            "augment": request.transform_name,
            "segment_bounds": None,
        }

        if isinstance(star, StarRgb):
            header["segment_bounds"] = [segment.as_list() for segment in star.segment_bounds]
            planes = star.as_array()
            outputs = self._write_main(base, planes, planes, header, request)
        else:
            outputs = self._write_gray(base, star, header, request)
            planes = star.m.data[..., np.newaxis]

        summary = EncodeSummary(
            clip_id=clip.clip_id,
            frames=clip.frame_count,
            metric=config.metric.value,
            representation=config.representation.value,
            normalization=config.normalization.value,
            max_value=float(planes.max()),
            reversed=request.reverse,
            outputs=outputs,
        )
        log.info(f"Encoded {clip.clip_id}: {len(outputs)} file(s), max {summary.max_value:.6g}")
        return summary

    def _prepare(self, clip: ClipSource, request: EncodeRequest) -> ClipSource:
        """Resize frames and reverse order as requested."""
        if request.transform.resize_to is not None:
            width, height = request.transform.resize_to
            clip = ClipSource(
                frames=tuple(resize(frame, width, height) for frame in clip.frames),
                clip_id=clip.clip_id,
                label=clip.label,
            )
        if request.reverse:
            clip = reverse_clip(clip)
        return clip

    def _write_main(
        self,
        base: Path,
        sidecar_planes: np.ndarray,
        image_planes: np.ndarray,
        header: dict,
        request: EncodeRequest
    ) -> List[str]:
        scaled = scale_channels(image_planes, request.config.normalization)
        if not request.transform.is_identity:
            scaled = augment(scaled, request.transform, derive_seed(request.seed, request.entry.clip_id))
        return [
            self.store.write_png(f"{base}.png", quantize(scaled)),
            self.store.write_sidecar(f"{base}.star", sidecar_planes, header),
        ]

    def _write_gray(self, base: Path, star: StarGray, header: dict, request: EncodeRequest) -> List[str]:
        m_planes = star.m.data[..., np.newaxis]
        if not star.has_gradients:
            return self._write_main(base, m_planes, m_planes, header, request)

        outputs = self._write_main(base, stack_legacy_channels(star), m_planes, header, request)
        outputs.append(self.store.write_png(f"{base}_mx.png", normalize_gradient(star.m_x)))
        outputs.append(self.store.write_png(f"{base}_my.png", normalize_gradient(star.m_y)))
        return outputs
