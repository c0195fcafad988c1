"""
Segment Corpus Use Case.
Materialises one frame directory per labeled gesture of a manifest.
"""
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import BaseModel, Field

from app.core.exceptions import StarRepresentationException
from app.core.logging import log
from app.domain.entities import ManifestEntry
from app.domain.repositories import IClipRepository


class SegmentOutcome(BaseModel):
    clip_id: str
    label: Optional[str] = None
    status: str
    frames: int = 0
    directory: Optional[str] = None
    error: Optional[str] = None


class SegmentReport(BaseModel):
    entries: List[SegmentOutcome] = Field(default_factory=list)
    succeeded: int = 0
    failed: int = 0


class SegmentCorpusUseCase:
    """
    Use case for clipping gestures out of long sources.

    Writes DIR/<clip_id>/00001.png ... for each entry.
    """

    def __init__(self, clip_repository: IClipRepository):
        self.clip_repo = clip_repository

    def execute(self, entries: Sequence[ManifestEntry], out_dir: str) -> SegmentReport:
        log.info(f"Segmenting {len(entries)} gestures into {out_dir}")
        outcomes = []
        for entry in entries:
            try:
                clip = self.clip_repo.load_clip(entry)
                directory = Path(out_dir) / entry.clip_id
                self.clip_repo.write_frames(str(directory), [frame.data for frame in clip.frames])
                outcomes.append(SegmentOutcome(
                    clip_id=entry.clip_id,
                    label=entry.label,
                    status="ok",
                    frames=clip.frame_count,
                    directory=str(directory),
                ))
            except StarRepresentationException as e:
                log.error(f"Segment {entry.clip_id} failed: {e.message}")
                outcomes.append(SegmentOutcome(clip_id=entry.clip_id, label=entry.label, status="failed", error=e.message))

        return SegmentReport(
            entries=outcomes,
            succeeded=sum(1 for o in outcomes if o.status == "ok"),
            failed=sum(1 for o in outcomes if o.status != "ok"),
        )
