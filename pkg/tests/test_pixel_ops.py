"""Pixel, Frame and ClipSource entities and pixel arithmetic."""
import numpy as np
import pytest
from pydantic import ValidationError

from app.core.exceptions import ClipTooShortError, DimensionMismatchError
from app.domain.entities import ClipSource, Frame, Pixel
from app.domain.services import luminance, pixel_norm, to_grayscale
from tests.synthetic import constant_frame


@pytest.mark.parametrize("rgb,expected", [
    ((0, 0, 0), 0.0),
    ((1, 1, 1), 1.7320508),
    ((3, 4, 0), 5.0),
])
def test_pixel_norm(rgb, expected):
    assert pixel_norm(Pixel.of(*rgb)) == pytest.approx(expected, abs=1e-7)


def test_pixel_norm_zero_only_for_black():
    assert pixel_norm(Pixel.of(0, 0, 0)) == 0.0
    assert pixel_norm(Pixel.of(0, 0, 1e-9)) > 0.0


def test_pixel_norm_is_homogeneous(rng):
    for rgb, c in zip(rng.uniform(0, 255, size=(200, 3)), rng.uniform(0, 10, size=200)):
        p = Pixel.of(*rgb)
        assert pixel_norm(Pixel.of(*(rgb * c))) == pytest.approx(c * pixel_norm(p), rel=1e-9, abs=1e-12)


def test_pixel_rejects_negative_and_non_finite():
    with pytest.raises(ValidationError):
        Pixel.of(-1, 0, 0)
    with pytest.raises(ValidationError):
        Pixel.of(float("nan"), 0, 0)


def test_to_grayscale_examples():
    gray = to_grayscale(constant_frame(4, 3, (100, 100, 100)))
    np.testing.assert_allclose(gray.data, 100.0, atol=1e-9)

    frame = Frame(data=[[[255, 0, 0], [0, 0, 0]]])
    gray = to_grayscale(frame)
    np.testing.assert_allclose(gray.data[0, 0], [76.245] * 3, atol=1e-9)
    np.testing.assert_array_equal(gray.data[0, 1], [0.0, 0.0, 0.0])


def test_to_grayscale_is_idempotent(rng):
    frame = Frame(data=rng.uniform(0, 255, size=(5, 6, 3)))
    once = to_grayscale(frame)
    np.testing.assert_allclose(to_grayscale(once).data, once.data, rtol=1e-9, atol=1e-9)


def test_luminance_drops_channel_axis():
    assert luminance(np.zeros((4, 5, 3))).shape == (4, 5)


def test_frame_dimensions_follow_row_major_layout():
    frame = Frame(data=np.arange(18, dtype=np.float64).reshape(2, 3, 3))
    assert (frame.width, frame.height) == (3, 2)
    assert frame.shape == (2, 3)
    assert frame.data[1, 0, 0] == 9.0


def test_frame_validation():
    with pytest.raises(ValidationError):
        Frame(data=np.zeros((2, 2, 4)))
    with pytest.raises(ValidationError):
        Frame(data=-np.ones((2, 2, 3)))
    with pytest.raises(ValidationError):
        Frame(data=np.zeros((0, 2, 3)))


def test_frame_is_immutable():
    frame = constant_frame(2, 2, (1, 2, 3))
    with pytest.raises(ValueError):
        frame.data[0, 0, 0] = 9.0


def test_clip_needs_two_frames():
    with pytest.raises(ClipTooShortError):
        ClipSource(frames=(constant_frame(2, 2, (0, 0, 0)),))


def test_clip_frames_share_dimensions():
    with pytest.raises(DimensionMismatchError):
        ClipSource(frames=(constant_frame(2, 2, (0, 0, 0)), constant_frame(3, 2, (0, 0, 0))))
