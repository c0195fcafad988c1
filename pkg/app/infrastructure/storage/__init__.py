"""File-system storage adapters."""
from app.infrastructure.storage import raw_container
from app.infrastructure.storage.file_artifact_store import FileArtifactStore
from app.infrastructure.storage.file_clip_repository import FileClipRepository
from app.infrastructure.storage.manifest_io import parse_manifest, read_manifest, serialize_manifest

__all__ = [
    "raw_container",
    "FileArtifactStore",
    "FileClipRepository",
    "parse_manifest",
    "read_manifest",
    "serialize_manifest",
]
