"""
Compare Images Use Case.
Absolute difference of two star images with per-channel statistics.
"""
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field

from app.application.services import quantize, scale_channels
from app.core.exceptions import DimensionMismatchError, InvalidInputError
from app.core.logging import log
from app.domain.entities import Normalization
from app.domain.repositories import IArtifactStore


class ChannelStats(BaseModel):
    channel: int
    max_abs_diff: float
    mean_abs_diff: float
    relative_max: float
    relative_mean: float


class CompareSummary(BaseModel):
    """
    Difference statistics.

    Relative values divide by the largest magnitude found in either input.
    """
    channels: List[ChannelStats] = Field(default_factory=list)
    max_abs_diff: float
    mean_abs_diff: float
    relative_max: float
    relative_mean: float
    source_kind: str
    outputs: List[str] = Field(default_factory=list)


class CompareImagesUseCase:
    """
    Use case for the reversed-sequence diagnostic and other image comparisons.

    Float sidecars are compared before quantisation whenever available.
    """

    def __init__(self, artifact_store: IArtifactStore):
        self.store = artifact_store

    def execute(self, path_a: str, path_b: str, out_dir: Optional[str] = None, swap_rb: bool = False) -> CompareSummary:
        """
        Compare two images and optionally write the difference.

        Args:
            path_a: First image (.star sidecar or PNG)
            path_b: Second image
            out_dir: Where diff.star and diff.png go, None to skip writing
            swap_rb: Exchange R and B of the second image first

        Raises:
            DimensionMismatchError: If the images differ in shape
        """
        header_a, a = self.store.read_image(path_a)
        header_b, b = self.store.read_image(path_b)
        if swap_rb:
            if b.shape[-1] != 3:
                raise InvalidInputError("--swap-rb needs a 3-channel image", {"channels": b.shape[-1]})
            b = b[..., ::-1]
        if a.shape != b.shape:
            raise DimensionMismatchError(
                f"Images differ in shape: {a.shape} vs {b.shape}",
                {"a": list(a.shape), "b": list(b.shape)}
            )

        diff = np.abs(a - b)
        scale = float(max(np.abs(a).max(), np.abs(b).max()))

        def relative(value: float) -> float:
            return value / scale if scale > 0 else 0.0

        channels = [
            ChannelStats(
                channel=c,
                max_abs_diff=float(diff[..., c].max()),
                mean_abs_diff=float(diff[..., c].mean()),
                relative_max=relative(float(diff[..., c].max())),
                relative_mean=relative(float(diff[..., c].mean())),
            )
            for c in range(diff.shape[-1])
        ]

        outputs = []
        if out_dir is not None:
            target = Path(out_dir)
            header = {
                "kind": "difference",
                "clip_id": header_a.get("clip_id", ""),
                "metric": header_a.get("metric"),
                "normalization": Normalization.PER_CHANNEL_MAX.value,
                "segment_bounds": header_a.get("segment_bounds"),
            }
            outputs.append(self.store.write_sidecar(str(target / "diff.star"), diff, header))
            outputs.append(self.store.write_png(
                str(target / "diff.png"),
                quantize(scale_channels(diff, Normalization.PER_CHANNEL_MAX))
            ))

        summary = CompareSummary(
            channels=channels,
            max_abs_diff=float(diff.max()),
            mean_abs_diff=float(diff.mean()),
            relative_max=relative(float(diff.max())),
            relative_mean=relative(float(diff.mean())),
            source_kind="png" if "png" in (header_a.get("kind"), header_b.get("kind")) else "sidecar",
            outputs=outputs,
        )
        log.info(f"Max |A - B| = {summary.max_abs_diff:.6g} (relative {summary.relative_max:.3g})")
        return summary
