"""
Clip repository interface.
Decouples the encoders from where frames are stored.
"""
from abc import ABC, abstractmethod
from typing import List, Optional, Sequence

import numpy as np

from app.domain.entities import ClipSource, ManifestEntry


class IClipRepository(ABC):
    """
    Interface for reading gesture clips and writing frame directories.
    """

    @abstractmethod
    def load_clip(self, entry: ManifestEntry) -> ClipSource:
        """
        Read frames start_frame..end_frame of an entry's source, in index order.

        Args:
            entry: Manifest entry

        Returns:
            ClipSource with entry.frame_count frames

        Raises:
            MissingFrameError: If a frame index is absent
            DimensionMismatchError: If frame sizes differ
            StorageError: If the source cannot be read
        """
        pass

    @abstractmethod
    def entry_for_source(self, source: str, clip_id: Optional[str] = None) -> ManifestEntry:
        """
        Manifest entry covering every frame of a source.

        Args:
            source: Frame directory or raw container path
            clip_id: Identifier, defaults to the source name

        Returns:
            Entry spanning the source's first to last frame
        """
        pass

    @abstractmethod
    def write_frames(self, directory: str, frames: Sequence[np.ndarray]) -> List[str]:
        """
        Write frames as zero-padded numbered images.

        Returns:
            Written file paths in frame order
        """
        pass
