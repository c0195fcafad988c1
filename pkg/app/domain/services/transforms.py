"""
Geometric preprocessing and augmentation.

Functions accept either a Frame or an (height, width, channels) array and
return the same kind. Randomness always comes from an explicit generator.
"""
import hashlib
from typing import Optional, Union

import cv2
import numpy as np

from app.core.exceptions import DimensionMismatchError
from app.domain.entities import CropMode, CropSpec, Frame, TransformSpec

Image = Union[Frame, np.ndarray]


def _array(img: Image) -> np.ndarray:
    return img.data if isinstance(img, Frame) else np.asarray(img, dtype=np.float64)


def _like(img: Image, data: np.ndarray) -> Image:
    return Frame(data=data) if isinstance(img, Frame) else data


def derive_seed(seed: int, clip_id: str) -> int:
    """Per-clip seed, independent of processing order."""
    digest = hashlib.sha256(f"{seed}:{clip_id}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


def _bilinear_axis(n_in: int, n_out: int):
    """Source indices and weights along one axis, pixel centres at (i + 0.5) / n."""
    src = (np.arange(n_out, dtype=np.float64) + 0.5) * (n_in / n_out) - 0.5
    src = np.clip(src, 0.0, n_in - 1)
    lo = np.floor(src).astype(np.intp)
    hi = np.minimum(lo + 1, n_in - 1)
    return lo, hi, src - lo


def resize(img: Image, width: int, height: int) -> Image:
    """Bilinear resize to width x height."""
    if width < 1 or height < 1:
        raise DimensionMismatchError("resize target must be positive", {"width": width, "height": height})
    data = _array(img)
    if data.shape[:2] == (height, width):
        return _like(img, data.copy())

    lo, hi, t = _bilinear_axis(data.shape[0], height)
    t = t.reshape((-1,) + (1,) * (data.ndim - 1))
    rows = data[lo] * (1.0 - t) + data[hi] * t

    lo, hi, t = _bilinear_axis(data.shape[1], width)
    t = t.reshape((1, -1) + (1,) * (data.ndim - 2))
    out = rows[:, lo] * (1.0 - t) + rows[:, hi] * t
    return _like(img, out)


def crop(img: Image, spec: CropSpec, rng: Optional[np.random.Generator] = None) -> Image:
    """
    Crop a spec.width x spec.height window.

    Center crops use floor((W - w) / 2) and floor((H - h) / 2) offsets; random
    crops draw both offsets uniformly from the valid range.

    Raises:
        DimensionMismatchError: If the window is larger than the image
    """
    data = _array(img)
    height, width = data.shape[:2]
    if spec.width > width or spec.height > height:
        raise DimensionMismatchError(
            f"crop {spec.width}x{spec.height} does not fit in {width}x{height}",
            {"crop": [spec.width, spec.height], "image": [width, height]}
        )
    if spec.mode == CropMode.RANDOM:
        rng = rng or np.random.default_rng(0)
        top = int(rng.integers(0, height - spec.height + 1))
        left = int(rng.integers(0, width - spec.width + 1))
    else:
        top = (height - spec.height) // 2
        left = (width - spec.width) // 2
    return _like(img, data[top:top + spec.height, left:left + spec.width].copy())


def hflip(img: Image) -> Image:
    """Mirror columns."""
    return _like(img, _array(img)[:, ::-1].copy())


def rotate(img: Image, degrees: float) -> Image:
    """Rotate about the image centre with bilinear resampling and zero fill."""
    data = _array(img)
    height, width = data.shape[:2]
    matrix = cv2.getRotationMatrix2D(((width - 1) / 2.0, (height - 1) / 2.0), degrees, 1.0)
    rotated = cv2.warpAffine(
        data.astype(np.float32),
        matrix,
        (width, height),
        flags=cv2.INTER_LINEAR,
        borderMode=cv2.BORDER_CONSTANT,
        borderValue=0,
    )
    return _like(img, rotated.astype(np.float64).reshape(data.shape))


def add_noise(img: Image, mu: float, sigma: float, rng: np.random.Generator) -> Image:
    """Additive Gaussian noise per channel, clamped to [0, 255]."""
    data = _array(img)
    noisy = data + rng.normal(mu, sigma, size=data.shape)
    return _like(img, np.clip(noisy, 0.0, 255.0))


def augment(img: Image, spec: TransformSpec, seed: int) -> Image:
    """
    Apply crop, flip, rotation and noise in that order, fully determined by seed.

    Resizing is not part of augmentation; spec.resize_to applies to frames
    before encoding.
    """
    if spec.is_identity:
        return _like(img, _array(img).copy())

    rng = np.random.default_rng(seed)
    out = img
    if spec.crop is not None:
        out = crop(out, spec.crop, rng)
    if spec.hflip_prob > 0.0 and rng.random() < spec.hflip_prob:
        out = hflip(out)
    if spec.rotation_degrees > 0.0:
        out = rotate(out, float(rng.uniform(-spec.rotation_degrees, spec.rotation_degrees)))
    if spec.noise is not None:
        out = add_noise(out, spec.noise.mu, spec.noise.sigma, rng)
    return out
