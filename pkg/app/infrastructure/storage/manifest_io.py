"""
JSON-Lines manifest parsing and serialisation.
"""
import json
from pathlib import Path
from typing import List, Sequence

from pydantic import ValidationError

from app.core.exceptions import ManifestError, StorageError
from app.core.logging import log
from app.domain.entities import ManifestEntry


def _describe(error: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in err['loc']) or 'entry'}: {err['msg']}"
        for err in error.errors()
    )


def parse_manifest(text: str) -> List[ManifestEntry]:
    """
    Parse a JSON-Lines manifest.

    Blank lines are skipped and unknown fields ignored.

    Raises:
        ManifestError: On malformed JSON or an invalid entry, naming the line
    """
    entries = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as e:
            raise ManifestError(f"malformed JSON ({e.msg})", line_number)
        if not isinstance(record, dict):
            raise ManifestError("expected a JSON object", line_number)
        try:
            entries.append(ManifestEntry.model_validate({**record, "line_number": line_number}))
        except ValidationError as e:
            raise ManifestError(_describe(e), line_number)
    log.debug(f"Parsed {len(entries)} manifest entries")
    return entries


def serialize_manifest(entries: Sequence[ManifestEntry]) -> str:
    """One compact JSON object per line, in entry order."""
    return "".join(
        json.dumps(entry.model_dump(mode="json", exclude_none=True), ensure_ascii=False) + "\n"
        for entry in entries
    )


def read_manifest(path: Path) -> List[ManifestEntry]:
    """
    Read and parse a manifest file.

    Raises:
        StorageError: If the file cannot be read
        ManifestError: If the content is invalid
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise StorageError(f"Failed to read manifest: {e}", {"path": str(path)})
    return parse_manifest(text)
