"""Domain services: pure computations over domain entities."""
from app.domain.services.pixel_ops import luminance, pixel_norm, to_grayscale
from app.domain.services.pixel_metrics import (
    abs_gray_diff,
    cosine_scaled_diff,
    cosine_scaled_distance_map,
    cosine_terms,
    euclidean_diff,
    euclidean_distance_map,
    gray_difference_map,
)
from app.domain.services.attention_fusion import (
    check_maps,
    fuse,
    init_params,
    score,
    softmax,
    standardize,
    weighted_sum,
)
from app.domain.services.transforms import (
    add_noise,
    augment,
    crop,
    derive_seed,
    hflip,
    resize,
    rotate,
)

__all__ = [
    "luminance",
    "pixel_norm",
    "to_grayscale",
    "abs_gray_diff",
    "cosine_scaled_diff",
    "cosine_scaled_distance_map",
    "cosine_terms",
    "euclidean_diff",
    "euclidean_distance_map",
    "gray_difference_map",
    "check_maps",
    "fuse",
    "init_params",
    "score",
    "softmax",
    "standardize",
    "weighted_sum",
    "add_noise",
    "augment",
    "crop",
    "derive_seed",
    "hflip",
    "resize",
    "rotate",
]
