"""
Export normalisation: float star images to 8-bit planes.

Quantisation is round-half-up into [0, 255].
"""
from typing import Union

import numpy as np

from app.core.exceptions import InvalidEncodeConfigError
from app.domain.entities import GradientMatrix, Normalization, StarGray, StarRgb

StarImage = Union[StarGray, StarRgb]


def channel_stack(img: StarImage) -> np.ndarray:
    """(height, width, C) float planes: R, G, B for StarRgb, M alone for StarGray."""
    if isinstance(img, StarRgb):
        return img.as_array()
    return img.m.data[..., np.newaxis]


def stack_legacy_channels(img: StarGray) -> np.ndarray:
    """The three-plane (M, M_X, M_Y) star of the original formulation."""
    if not img.has_gradients:
        raise InvalidEncodeConfigError("StarGray has no Sobel channels", {"clip_id": img.clip_id})
    return np.stack([img.m.data, img.m_x.data, img.m_y.data], axis=-1)


def quantize(values: np.ndarray) -> np.ndarray:
    """Round half up and clamp to uint8."""
    return np.clip(np.floor(values + 0.5), 0, 255).astype(np.uint8)


def scale_channels(planes: np.ndarray, mode: Normalization) -> np.ndarray:
    """
    Scale (height, width, C) nonnegative planes into [0, 255] without rounding.

    global_max divides by the maximum over all channels, per_channel_max by
    each channel's own maximum; none clamps values as they are. All-zero
    channels stay zero.
    """
    planes = np.asarray(planes, dtype=np.float64)
    mode = Normalization(mode)
    if mode == Normalization.NONE:
        return np.clip(planes, 0.0, 255.0)
    if mode == Normalization.GLOBAL_MAX:
        peak = planes.max()
        return planes / peak * 255.0 if peak > 0 else np.zeros_like(planes)

    scaled = np.zeros_like(planes)
    for c in range(planes.shape[-1]):
        peak = planes[..., c].max()
        if peak > 0:
            scaled[..., c] = planes[..., c] / peak * 255.0
    return scaled


def normalize_for_export(img: StarImage, mode: Normalization) -> np.ndarray:
    """(height, width, C) uint8 image of a star (C = 3 for StarRgb, 1 for StarGray M)."""
    return quantize(scale_channels(channel_stack(img), mode))


def normalize_gradient(g: GradientMatrix) -> np.ndarray:
    """Signed plane to uint8: divide by max |value|, map to [-127, 127], shift by +128."""
    peak = float(np.abs(g.data).max())
    if peak == 0.0:
        return np.full(g.data.shape, 128, dtype=np.uint8)
    return quantize(g.data / peak * 127.0 + 128.0)
