"""
Pixel arithmetic shared by every encoder.
"""
import numpy as np

from app.domain.entities import Frame, Pixel

# ITU-R BT.601 luma weights
LUMA_WEIGHTS = np.array([0.299, 0.587, 0.114], dtype=np.float64)


def pixel_norm(p: Pixel) -> float:
    """L2 norm of the pixel's channel vector."""
    return float(np.sqrt(np.dot(p.as_array(), p.as_array())))


def luminance(rgb: np.ndarray) -> np.ndarray:
    """
    BT.601 luminance of an (..., 3) array.

    Args:
        rgb: Array whose last axis holds (r, g, b)

    Returns:
        Array with the channel axis removed
    """
    return np.asarray(rgb, dtype=np.float64) @ LUMA_WEIGHTS


def to_grayscale(f: Frame) -> Frame:
    """Frame whose three channels all carry the source luminance."""
    gray = luminance(f.data)
    return Frame(data=np.repeat(gray[..., np.newaxis], 3, axis=-1))
