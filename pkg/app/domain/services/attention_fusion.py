"""
Soft-attention ensemble over flattened feature maps.

Each map is standardized, scored by a shared perceptron (ReLU hidden layer,
linear output), the scores are softmax-normalized, and the raw maps are summed
with those weights.
"""
from typing import Optional, Sequence

import numpy as np

from app.core.config import settings
from app.core.exceptions import DimensionMismatchError, InvalidFeatureError
from app.domain.entities import FeatureVector, FusionMode, FusionResult, ScorerParams


def standardize(v: FeatureVector, epsilon: Optional[float] = None) -> FeatureVector:
    """
    Zero-mean, unit-variance rescaling over the vector's own elements.

    Args:
        v: Feature vector with at least two elements
        epsilon: Variance guard, defaults to settings.standardize_epsilon

    Raises:
        InvalidFeatureError: If the vector has fewer than two elements
    """
    if v.dim < 2:
        raise InvalidFeatureError(
            "standardize needs at least 2 elements",
            {"dim": v.dim}
        )
    eps = settings.standardize_epsilon if epsilon is None else epsilon
    x = v.values
    if np.ptp(x) == 0.0:
        return FeatureVector(values=np.zeros_like(x))
    return FeatureVector(values=(x - x.mean()) / np.sqrt(x.var() + eps))


def score(v: FeatureVector, p: ScorerParams) -> float:
    """
    Scalar attention score: b2 + w2 . relu(w1^T v + b1).

    Raises:
        DimensionMismatchError: If len(v) != p.d
    """
    if v.dim != p.d:
        raise DimensionMismatchError(
            f"Feature vector has {v.dim} elements, scorer expects {p.d}",
            {"dim": v.dim, "expected": p.d}
        )
    hidden = np.maximum(v.values @ p.w1 + p.b1, 0.0)
    return float(p.b2 + hidden @ p.w2)


def softmax(scores: Sequence[float]) -> np.ndarray:
    """
    Numerically stable softmax of a score vector.

    Weights that underflow are raised to the smallest positive normal float so
    every weight stays positive. Once scores are more than about 745 apart the
    dominant weight rounds to exactly 1.0.
    """
    z = np.asarray(scores, dtype=np.float64)
    shifted = np.exp(z - z.max())
    return np.maximum(shifted / shifted.sum(), np.finfo(np.float64).tiny)


def check_maps(maps: Sequence[FeatureVector]) -> int:
    """
    Validate a fusion input set and return the shared dimension.

    Raises:
        InvalidFeatureError: If fewer than two maps are given
        DimensionMismatchError: If the maps differ in length
    """
    if len(maps) < 2:
        raise InvalidFeatureError(
            f"Fusion needs at least 2 feature maps, got {len(maps)}",
            {"maps": len(maps)}
        )
    dims = [m.dim for m in maps]
    if len(set(dims)) != 1:
        raise DimensionMismatchError(
            "All feature maps must have the same length",
            {"dims": dims}
        )
    return dims[0]


def weighted_sum(maps: Sequence[FeatureVector], weights: Sequence[float]) -> np.ndarray:
    """Sequential weighted sum of the raw maps."""
    fused = np.zeros_like(maps[0].values)
    for weight, feature_map in zip(weights, maps):
        fused = fused + weight * feature_map.values
    return fused


def fuse(maps: Sequence[FeatureVector], p: ScorerParams) -> FusionResult:
    """
    Soft-attention fusion.

    Scores come from the standardized maps; the weighted sum uses the raw maps
    so the fused vector stays in the original feature space.
    """
    check_maps(maps)
    scores = [score(standardize(m), p) for m in maps]
    weights = softmax(scores)
    return FusionResult(
        fused=FeatureVector(values=weighted_sum(maps, weights)),
        weights=tuple(float(w) for w in weights),
        scores=tuple(scores),
        mode=FusionMode.SOFT_ATTENTION,
    )


def init_params(d: int, seed: int, hidden: Optional[int] = None) -> ScorerParams:
    """
    Seeded scorer initialisation, uniform in +/- 1/sqrt(fan_in) per layer.

    Args:
        d: Input dimension
        seed: Generator seed
        hidden: Hidden units, defaults to settings.scorer_hidden_units
    """
    if d < 1:
        raise InvalidFeatureError("d must be >= 1", {"d": d})
    hidden = hidden or settings.scorer_hidden_units
    rng = np.random.default_rng(seed)
    bound_in = 1.0 / np.sqrt(d)
    bound_hidden = 1.0 / np.sqrt(hidden)
    return ScorerParams(
        w1=rng.uniform(-bound_in, bound_in, size=(d, hidden)),
        b1=rng.uniform(-bound_in, bound_in, size=hidden),
        w2=rng.uniform(-bound_hidden, bound_hidden, size=hidden),
        b2=float(rng.uniform(-bound_hidden, bound_hidden)),
    )
