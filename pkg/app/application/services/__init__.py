"""Application services: encoders and export normalisation."""
from app.application.services.star_encoder import (
    accumulate,
    accumulate_frames,
    encode,
    encode_star_gray,
    encode_star_legacy,
    encode_star_rgb,
    reverse_clip,
    sobel_gradients,
    split_segments,
)
from app.application.services.export import (
    StarImage,
    channel_stack,
    normalize_for_export,
    normalize_gradient,
    quantize,
    scale_channels,
    stack_legacy_channels,
)

__all__ = [
    "accumulate",
    "accumulate_frames",
    "encode",
    "encode_star_gray",
    "encode_star_legacy",
    "encode_star_rgb",
    "reverse_clip",
    "sobel_gradients",
    "split_segments",
    "StarImage",
    "channel_stack",
    "normalize_for_export",
    "normalize_gradient",
    "quantize",
    "scale_channels",
    "stack_legacy_channels",
]
