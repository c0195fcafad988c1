"""
STRV1 raw frame container.

Layout: the magic bytes b"STRV1\\n", one JSON header line
{"frame_count", "height", "width"}, then each frame as three channel planes
(R, G, B) of unsigned 8-bit samples in row-major order.
"""
import json
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from app.core.exceptions import MissingFrameError, StorageError

MAGIC = b"STRV1\n"


def to_uint8(frame: np.ndarray) -> np.ndarray:
    """Round half up and clamp a float frame to uint8."""
    return np.clip(np.floor(np.asarray(frame, dtype=np.float64) + 0.5), 0, 255).astype(np.uint8)


def write_container(path: Path, frames: Sequence[np.ndarray]) -> Path:
    """
    Write (height, width, 3) frames into a container file.

    Raises:
        StorageError: If the frames disagree in shape or the file cannot be written
    """
    path = Path(path)
    if not frames:
        raise StorageError("Cannot write an empty container", {"path": str(path)})
    shapes = {np.shape(frame) for frame in frames}
    if len(shapes) != 1:
        raise StorageError("Container frames must share one shape", {"shapes": sorted(shapes)})
    height, width, _ = shapes.pop()
    header = json.dumps(
        {"frame_count": len(frames), "height": height, "width": width},
        sort_keys=True,
        separators=(",", ":"),
    )
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "wb") as handle:
            handle.write(MAGIC)
            handle.write(header.encode("utf-8") + b"\n")
            for frame in frames:
                handle.write(np.ascontiguousarray(to_uint8(frame).transpose(2, 0, 1)).tobytes())
    except OSError as e:
        raise StorageError(f"Failed to write container: {e}", {"path": str(path)})
    return path


def read_header(path: Path) -> Tuple[Dict[str, Any], int]:
    """
    Container header and the byte offset of the first frame.

    Raises:
        StorageError: If the magic or header is invalid
    """
    try:
        with open(path, "rb") as handle:
            if handle.read(len(MAGIC)) != MAGIC:
                raise StorageError("Not a STRV1 container", {"path": str(path)})
            line = handle.readline()
            offset = handle.tell()
    except OSError as e:
        raise StorageError(f"Failed to read container: {e}", {"path": str(path)})
    try:
        header = json.loads(line.decode("utf-8"))
        if not isinstance(header, dict):
            raise ValueError("header is not a JSON object")
        for key in ("width", "height", "frame_count"):
            value = header.get(key)
            if not isinstance(value, int) or isinstance(value, bool) or value < 1:
                raise ValueError(f"bad '{key}'")
    except (ValueError, TypeError, AttributeError, UnicodeDecodeError) as e:
        raise StorageError(f"Malformed container header: {e}", {"path": str(path)})
    return header, offset


def read_frames(path: Path, start: int, end: int) -> List[np.ndarray]:
    """
    Frames start..end (1-based inclusive) as (height, width, 3) float64 arrays.

    Raises:
        MissingFrameError: If an index lies beyond the stored frames
        StorageError: If the file is truncated or unreadable
    """
    header, offset = read_header(path)
    width, height, count = header["width"], header["height"], header["frame_count"]
    if end > count:
        missing = max(start, count + 1)
        raise MissingFrameError(
            f"missing frame {missing} in {path} (container holds {count})",
            {"path": str(path), "frame": missing}
        )
    frame_bytes = 3 * width * height
    frames = []
    try:
        with open(path, "rb") as handle:
            for index in range(start, end + 1):
                handle.seek(offset + (index - 1) * frame_bytes)
                raw = handle.read(frame_bytes)
                if len(raw) != frame_bytes:
                    raise StorageError(f"Container truncated at frame {index}", {"path": str(path)})
                planes = np.frombuffer(raw, dtype=np.uint8).reshape(3, height, width)
                frames.append(planes.transpose(1, 2, 0).astype(np.float64))
    except OSError as e:
        raise StorageError(f"Failed to read container: {e}", {"path": str(path)})
    return frames
