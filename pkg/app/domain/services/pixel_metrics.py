"""
Pixel-pair distances used to accumulate star images.

Each metric has a scalar form working on Pixel entities and a map form working
on whole (..., 3) frame arrays. The scalar forms call the map forms so both
agree bit for bit.
"""
from typing import Optional, Tuple

import numpy as np

from app.core.config import settings
from app.domain.entities import DistanceBreakdown, Pixel
from app.domain.services.pixel_ops import luminance


def abs_gray_diff(a: float, b: float) -> float:
    """Absolute difference of two gray values."""
    return abs(float(a) - float(b))


def euclidean_diff(a: Pixel, b: Pixel) -> float:
    """L2 distance between two pixels."""
    return float(euclidean_distance_map(a.as_array(), b.as_array()))


def cosine_scaled_diff(a: Pixel, b: Pixel, epsilon: Optional[float] = None) -> DistanceBreakdown:
    """
    Cosine-scaled distance between two pixels.

    lambda = 1 - cos(theta); value = (1 - lambda/2) * | ||a|| - ||b|| |.
    When either norm is below epsilon the angle is undefined and lambda is 0.
    """
    lam, norm_a, norm_b = cosine_terms(a.as_array(), b.as_array(), epsilon)
    return DistanceBreakdown.build(float(lam), float(norm_a), float(norm_b))


def gray_difference_map(prev: np.ndarray, curr: np.ndarray) -> np.ndarray:
    """|luminance(prev) - luminance(curr)| per pixel."""
    return np.abs(luminance(prev) - luminance(curr))


def euclidean_distance_map(prev: np.ndarray, curr: np.ndarray) -> np.ndarray:
    """||prev - curr||_2 per pixel."""
    delta = np.asarray(prev, dtype=np.float64) - np.asarray(curr, dtype=np.float64)
    return np.sqrt(np.einsum("...c,...c->...", delta, delta))


def cosine_terms(
    prev: np.ndarray,
    curr: np.ndarray,
    epsilon: Optional[float] = None
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Lambda and both norms for every pixel pair.

    Returns:
        (lambda, norm_prev, norm_curr), each with the channel axis removed
    """
    eps = settings.cosine_epsilon if epsilon is None else epsilon
    a = np.asarray(prev, dtype=np.float64)
    b = np.asarray(curr, dtype=np.float64)

    norm_a = np.sqrt(np.einsum("...c,...c->...", a, a))
    norm_b = np.sqrt(np.einsum("...c,...c->...", b, b))
    dot = np.einsum("...c,...c->...", a, b)

    defined = (norm_a >= eps) & (norm_b >= eps)
    cosine = np.ones_like(dot)
    np.divide(dot, norm_a * norm_b, out=cosine, where=defined)
    np.clip(cosine, -1.0, 1.0, out=cosine)

    return 1.0 - cosine, norm_a, norm_b


def cosine_scaled_distance_map(
    prev: np.ndarray,
    curr: np.ndarray,
    epsilon: Optional[float] = None
) -> np.ndarray:
    """(1 - lambda/2) * | ||prev|| - ||curr|| | per pixel."""
    lam, norm_a, norm_b = cosine_terms(prev, curr, epsilon)
    return (1.0 - lam / 2.0) * np.abs(norm_a - norm_b)
