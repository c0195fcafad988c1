"""
Batch Encode Use Case.
Encodes every manifest entry, in parallel when more than one worker is requested.
"""
import time
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from pathlib import Path
from typing import Callable, List, Optional, Sequence

from pydantic import BaseModel, Field

from app.application.use_cases.encode_clip import EncodeClipUseCase, EncodeRequest
from app.core.exceptions import InvalidInputError, StarRepresentationException
from app.core.logging import log
from app.domain.entities import EncodeConfig, ManifestEntry, TransformSpec
from app.domain.repositories import IArtifactStore, IClipRepository

ClipRepositoryFactory = Callable[[Optional[str]], IClipRepository]
ArtifactStoreFactory = Callable[[], IArtifactStore]

REPORT_NAME = "report.json"


class BatchEntryOutcome(BaseModel):
    """Result of one manifest entry."""
    clip_id: str
    line: Optional[int] = None
    status: str
    wall_time_s: float
    outputs: List[str] = Field(default_factory=list)
    error: Optional[str] = None


class BatchReport(BaseModel):
    """Report of a batch run, entries in manifest order."""
    entries: List[BatchEntryOutcome] = Field(default_factory=list)
    succeeded: int = 0
    failed: int = 0
    jobs: int = 1
    wall_time_s: float = 0.0


def encode_entry(
    request: EncodeRequest,
    base_dir: Optional[str],
    repository_factory: ClipRepositoryFactory,
    store_factory: ArtifactStoreFactory
) -> BatchEntryOutcome:
    """
    Encode one entry, capturing failures in the outcome.

    Module-level so worker processes can unpickle it.
    """
    started = time.perf_counter()
    use_case = EncodeClipUseCase(repository_factory(base_dir), store_factory())
    try:
        summary = use_case.execute(request)
        return BatchEntryOutcome(
            clip_id=request.entry.clip_id,
            line=request.entry.line_number,
            status="ok",
            wall_time_s=time.perf_counter() - started,
            outputs=summary.outputs,
        )
    except StarRepresentationException as e:
        log.error(f"Entry {request.entry.clip_id} failed: {e.message}")
        error = e.message
    except Exception as e:
        log.error(f"Unexpected error on entry {request.entry.clip_id}: {str(e)}")
        error = f"{type(e).__name__}: {e}"
    return BatchEntryOutcome(
        clip_id=request.entry.clip_id,
        line=request.entry.line_number,
        status="failed",
        wall_time_s=time.perf_counter() - started,
        error=error,
    )


class BatchEncodeUseCase:
    """
    Use case for encoding a whole manifest.

    Each entry writes only files named after its clip_id, so workers never
    share outputs and results do not depend on the worker count.
    """

    def __init__(
        self,
        repository_factory: ClipRepositoryFactory,
        store_factory: ArtifactStoreFactory,
        base_dir: Optional[str] = None
    ):
        """
        Args:
            repository_factory: Builds a clip repository for a base directory
            store_factory: Builds an artifact store
            base_dir: Directory manifest sources are relative to
        """
        self.repository_factory = repository_factory
        self.store_factory = store_factory
        self.base_dir = base_dir

    def execute(
        self,
        entries: Sequence[ManifestEntry],
        out_dir: str,
        config: EncodeConfig,
        jobs: int = 1,
        seed: int = 0,
        transform: Optional[TransformSpec] = None,
        transform_name: str = "none"
    ) -> BatchReport:
        """
        Encode all entries and write report.json into out_dir.

        Raises:
            InvalidInputError: If clip_ids are not unique or jobs < 1
        """
        if jobs < 1:
            raise InvalidInputError("jobs must be >= 1", {"jobs": jobs})
        self._check_unique(entries)

        log.info(f"Batch encoding {len(entries)} entries with {jobs} worker(s)")
        requests = [
            EncodeRequest(
                entry=entry,
                config=config,
                out_dir=out_dir,
                transform=transform or TransformSpec(),
                transform_name=transform_name,
                seed=seed,
            )
            for entry in entries
        ]
        worker = partial(
            encode_entry,
            base_dir=self.base_dir,
            repository_factory=self.repository_factory,
            store_factory=self.store_factory,
        )

        started = time.perf_counter()
        if jobs == 1 or len(requests) <= 1:
            outcomes = [worker(request) for request in requests]
        else:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                outcomes = list(pool.map(worker, requests))

        report = BatchReport(
            entries=outcomes,
            succeeded=sum(1 for o in outcomes if o.status == "ok"),
            failed=sum(1 for o in outcomes if o.status != "ok"),
            jobs=jobs,
            wall_time_s=time.perf_counter() - started,
        )
        self.store_factory().write_json(str(Path(out_dir) / REPORT_NAME), report.model_dump(mode="json"))
        log.info(f"Batch complete: {report.succeeded} succeeded, {report.failed} failed")
        return report

    def _check_unique(self, entries: Sequence[ManifestEntry]):
        seen = {}
        for entry in entries:
            if entry.clip_id in seen:
                raise InvalidInputError(
                    f"Duplicate clip_id '{entry.clip_id}' on manifest lines {seen[entry.clip_id]} and {entry.line_number}",
                    {"clip_id": entry.clip_id}
                )
            seen[entry.clip_id] = entry.line_number
