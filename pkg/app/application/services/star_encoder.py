"""
Star encoder: condenses a clip into StarGray or StarRgb images.

The accumulation sums a per-pixel distance over every consecutive frame pair
(k = 2..N). The tri-split variant accumulates three sub-videos independently;
pairs that straddle a segment boundary are not counted.
"""
from typing import Optional, Tuple

import cv2
import numpy as np

from app.application.strategies import DistanceStrategy, get_distance_strategy
from app.core.config import settings
from app.core.exceptions import ClipTooShortError, InvalidEncodeConfigError
from app.core.logging import log
from app.domain.entities import (
    AccumulationMatrix,
    ClipSource,
    DistanceMetric,
    EncodeConfig,
    GradientMatrix,
    Representation,
    SegmentRange,
    StarGray,
    StarRgb,
)
from app.domain.services import to_grayscale


def accumulate_frames(frames: np.ndarray, strategy: DistanceStrategy, weighted_shadow: bool = False) -> np.ndarray:
    """
    Sum of pair distances over an (N, height, width, 3) frame stack.

    Raises:
        ClipTooShortError: If N < 2
    """
    n = frames.shape[0]
    if n < 2:
        raise ClipTooShortError(f"Accumulation needs at least 2 frames, got {n}", {"frames": n})
    distances = strategy.pair_distances(frames[:-1], frames[1:])
    if weighted_shadow:
        shadow = np.arange(2, n + 1, dtype=np.float64) / n
        distances = distances * shadow[:, np.newaxis, np.newaxis]
    return distances.sum(axis=0)


def accumulate(clip: ClipSource, metric: DistanceMetric, weighted_shadow: bool = False) -> AccumulationMatrix:
    """
    Accumulate a metric over all consecutive pairs of a clip.

    Args:
        clip: Clip with N >= 2 equally sized frames
        metric: Pixel distance
        weighted_shadow: Multiply the k-th term by k/N

    Returns:
        Nonnegative accumulation matrix
    """
    strategy = get_distance_strategy(metric)
    return AccumulationMatrix(data=accumulate_frames(clip.stack(), strategy, weighted_shadow))


def sobel_gradients(m: AccumulationMatrix) -> Tuple[GradientMatrix, GradientMatrix]:
    """3x3 Sobel responses of M along X and Y with replicated borders."""
    source = m.data.copy()
    m_x = cv2.Sobel(source, cv2.CV_64F, 1, 0, ksize=3, borderType=cv2.BORDER_REPLICATE)
    m_y = cv2.Sobel(source, cv2.CV_64F, 0, 1, ksize=3, borderType=cv2.BORDER_REPLICATE)
    return GradientMatrix(data=m_x), GradientMatrix(data=m_y)


def encode_star_legacy(clip: ClipSource, config: EncodeConfig) -> StarGray:
    """
    Original star: grayscale absolute differences, optional weighted shadow,
    optional Sobel channels.

    Raises:
        InvalidEncodeConfigError: If the metric is not abs_gray
    """
    if config.metric != DistanceMetric.ABS_GRAY:
        raise InvalidEncodeConfigError(
            "The legacy star requires metric abs_gray",
            {"metric": config.metric.value}
        )
    gray = ClipSource(
        frames=tuple(to_grayscale(frame) for frame in clip.frames),
        clip_id=clip.clip_id,
        label=clip.label,
    )
    m = accumulate(gray, DistanceMetric.ABS_GRAY, config.weighted_shadow)

    m_x: Optional[GradientMatrix] = None
    m_y: Optional[GradientMatrix] = None
    if config.sobel_channels:
        m_x, m_y = sobel_gradients(m)

    log.debug(f"Legacy star for {clip.clip_id}: N={clip.frame_count}, max={m.max():.6g}")
    return StarGray(m=m, m_x=m_x, m_y=m_y, clip_id=clip.clip_id, metric=DistanceMetric.ABS_GRAY)


def encode_star_gray(clip: ClipSource, config: EncodeConfig) -> StarGray:
    """Single-channel star for any metric; abs_gray takes the legacy path."""
    if config.metric == DistanceMetric.ABS_GRAY:
        return encode_star_legacy(clip, config)
    m = accumulate(clip, config.metric)
    log.debug(f"Single-channel {config.metric.value} star for {clip.clip_id}: max={m.max():.6g}")
    return StarGray(m=m, clip_id=clip.clip_id, metric=config.metric)


def split_segments(n: int) -> Tuple[SegmentRange, SegmentRange, SegmentRange]:
    """
    Pre-stroke, stroke and post-stroke frame ranges.

    Lengths are floor(n/3), n - 2*floor(n/3), floor(n/3).

    Raises:
        ClipTooShortError: If n is below the minimum of 6 frames
    """
    minimum = settings.min_star_rgb_frames
    if n < minimum:
        raise ClipTooShortError(
            f"clip too short: star RGB needs at least {minimum} frames, got {n}",
            {"frames": n, "minimum": minimum}
        )
    third = n // 3
    return (
        SegmentRange(start=1, end=third),
        SegmentRange(start=third + 1, end=n - third),
        SegmentRange(start=n - third + 1, end=n),
    )


def encode_star_rgb(clip: ClipSource, config: Optional[EncodeConfig] = None) -> StarRgb:
    """
    Star RGB: each sub-video accumulated on its own, first to R, middle to G, last to B.

    Raises:
        ClipTooShortError: If the clip has fewer than 6 frames
        InvalidEncodeConfigError: If legacy-only options are set
    """
    config = config or EncodeConfig()
    if config.weighted_shadow or config.sobel_channels:
        raise InvalidEncodeConfigError(
            "weighted_shadow and sobel_channels do not apply to star RGB",
            {"clip_id": clip.clip_id}
        )
    bounds = split_segments(clip.frame_count)
    strategy = get_distance_strategy(config.metric)
    frames = clip.stack()

    r, g, b = (
        AccumulationMatrix(data=accumulate_frames(frames[segment.start - 1:segment.end], strategy))
        for segment in bounds
    )
    log.debug(
        f"Star RGB for {clip.clip_id} ({strategy.get_strategy_name()}): segments {[s.as_list() for s in bounds]}, "
        f"max R/G/B = {r.max():.6g}/{g.max():.6g}/{b.max():.6g}"
    )
    return StarRgb(r=r, g=g, b=b, segment_bounds=bounds, clip_id=clip.clip_id, metric=config.metric)


def encode(clip: ClipSource, config: EncodeConfig):
    """Route to the encoder selected by config.representation."""
    if config.representation == Representation.STAR_RGB:
        return encode_star_rgb(clip, config)
    return encode_star_gray(clip, config)


def reverse_clip(clip: ClipSource) -> ClipSource:
    """The same clip played backwards."""
    return ClipSource(frames=clip.frames[::-1], clip_id=clip.clip_id, label=clip.label)
