"""Synthetic clips and on-disk corpora for tests."""
import json
from pathlib import Path
from typing import List, Optional

import numpy as np
from PIL import Image

from app.domain.entities import ClipSource, Frame
from app.infrastructure.storage import raw_container


def random_frames(rng: np.random.Generator, n: int, height: int, width: int, integer: bool = False) -> np.ndarray:
    """(n, height, width, 3) frames in [0, 255]."""
    if integer:
        return rng.integers(0, 256, size=(n, height, width, 3)).astype(np.float64)
    return rng.uniform(0.0, 255.0, size=(n, height, width, 3))


def constant_frame(width: int, height: int, value) -> Frame:
    return Frame(data=np.broadcast_to(np.asarray(value, dtype=np.float64), (height, width, 3)))


def random_clip(rng: np.random.Generator, n: int, height: int, width: int, clip_id: str = "clip") -> ClipSource:
    return ClipSource.from_array(random_frames(rng, n, height, width), clip_id=clip_id)


def moving_square_frames(n: int, height: int = 12, width: int = 16, size: int = 3) -> np.ndarray:
    """A bright square sliding right one pixel per frame over a dark background."""
    frames = np.full((n, height, width, 3), 20.0)
    for k in range(n):
        left = k % (width - size)
        frames[k, 2:2 + size, left:left + size] = (230.0, 120.0, 40.0)
    return frames


def as_grid(frames: np.ndarray) -> List:
    """Nested lists for the brute-force oracle."""
    return frames.tolist()


def write_frame_dir(directory: Path, frames: np.ndarray, first_index: int = 1) -> Path:
    """Write frames as 00001.png, 00002.png, ..."""
    directory.mkdir(parents=True, exist_ok=True)
    for offset, frame in enumerate(frames):
        Image.fromarray(raw_container.to_uint8(frame)).save(directory / f"{first_index + offset:05d}.png")
    return directory


def write_container(path: Path, frames: np.ndarray) -> Path:
    return raw_container.write_container(path, list(frames))


def manifest_line(clip_id: str, source: str, start: int, end: int, label: Optional[str] = None) -> str:
    record = {"clip_id": clip_id, "source": source, "start_frame": start, "end_frame": end}
    if label is not None:
        record["label"] = label
    return json.dumps(record)
