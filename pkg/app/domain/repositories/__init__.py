"""Domain repository interfaces."""
from app.domain.repositories.clip_repository import IClipRepository
from app.domain.repositories.artifact_store import IArtifactStore

__all__ = ["IClipRepository", "IArtifactStore"]
