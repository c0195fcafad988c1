"""
File-system clip repository.
Reads frame directories (zero-padded numbered images) and STRV1 containers.
"""
from pathlib import Path
from typing import Dict, List, Optional, Sequence

import numpy as np
from PIL import Image, UnidentifiedImageError

from app.core.exceptions import InvalidInputError, MissingFrameError, StorageError
from app.core.logging import log
from app.domain.entities import ClipSource, Frame, ManifestEntry
from app.domain.repositories import IClipRepository
from app.infrastructure.storage import raw_container

IMAGE_SUFFIXES = {".png", ".jpg", ".jpeg", ".bmp", ".ppm", ".tif", ".tiff"}
FRAME_NAME_WIDTH = 5


class FileClipRepository(IClipRepository):
    """
    File-system implementation of the clip repository.

    Relative sources resolve against base_dir, normally the manifest's directory.
    """

    def __init__(self, base_dir: Optional[Path] = None):
        """
        Args:
            base_dir: Directory relative sources are resolved from
        """
        self.base_dir = Path(base_dir) if base_dir is not None else None

    def resolve(self, source: str) -> Path:
        path = Path(source)
        if not path.is_absolute() and self.base_dir is not None:
            path = self.base_dir / path
        return path

    def load_clip(self, entry: ManifestEntry) -> ClipSource:
        path = self.resolve(entry.source)
        log.debug(f"Loading {entry.clip_id}: frames {entry.start_frame}..{entry.end_frame} of {path}")

        if path.is_dir():
            arrays = self._read_directory(path, entry.start_frame, entry.end_frame)
        elif path.is_file():
            arrays = raw_container.read_frames(path, entry.start_frame, entry.end_frame)
        else:
            raise StorageError(f"Source not found: {path}", {"clip_id": entry.clip_id, "source": str(path)})

        return ClipSource(
            frames=tuple(Frame(data=array) for array in arrays),
            clip_id=entry.clip_id,
            label=entry.label,
        )

    def entry_for_source(self, source: str, clip_id: Optional[str] = None) -> ManifestEntry:
        path = self.resolve(source)
        if path.is_dir():
            indices = sorted(self._index_directory(path))
            if not indices:
                raise InvalidInputError(f"No numbered frames in {path}", {"source": str(path)})
            start, end = indices[0], indices[-1]
        elif path.is_file():
            header, _ = raw_container.read_header(path)
            start, end = 1, header["frame_count"]
        else:
            raise StorageError(f"Source not found: {path}", {"source": str(path)})

        if end < start + 1:
            raise InvalidInputError(f"{path} holds fewer than 2 frames", {"source": str(path)})
        return ManifestEntry(clip_id=clip_id or path.stem, source=str(path), start_frame=start, end_frame=end)

    def write_frames(self, directory: str, frames: Sequence[np.ndarray]) -> List[str]:
        out_dir = Path(directory)
        written = []
        try:
            out_dir.mkdir(parents=True, exist_ok=True)
            for index, frame in enumerate(frames, start=1):
                target = out_dir / f"{index:0{FRAME_NAME_WIDTH}d}.png"
                Image.fromarray(raw_container.to_uint8(frame)).save(target, format="PNG")
                written.append(str(target))
        except OSError as e:
            raise StorageError(f"Failed to write frames: {e}", {"directory": str(out_dir)})
        return written

    def _index_directory(self, path: Path) -> Dict[int, Path]:
        """Frame number -> file, for files named by their (zero-padded) index."""
        return {
            int(item.stem): item
            for item in path.iterdir()
            if item.is_file() and item.suffix.lower() in IMAGE_SUFFIXES and item.stem.isdigit()
        }

    def _read_directory(self, path: Path, start: int, end: int) -> List[np.ndarray]:
        index = self._index_directory(path)
        arrays = []
        for number in range(start, end + 1):
            if number not in index:
                raise MissingFrameError(
                    f"missing frame {number} in {path}",
                    {"source": str(path), "frame": number}
                )
            try:
                with Image.open(index[number]) as image:
                    arrays.append(np.asarray(image.convert("RGB"), dtype=np.float64))
            except (OSError, UnidentifiedImageError) as e:
                raise StorageError(f"Unreadable frame {index[number]}: {e}", {"frame": number})
        return arrays
