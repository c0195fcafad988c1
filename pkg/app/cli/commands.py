"""
Command handlers for the star-rgb command line.

Each handler prints one compact JSON line on standard output and returns the
process exit code: 0 success, 1 partial batch failure, 2 input error, 3 I/O error.
"""
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from app.application.use_cases import (
    BatchEncodeUseCase,
    CompareImagesUseCase,
    EncodeClipUseCase,
    EncodeRequest,
    FuseFeaturesUseCase,
    SegmentCorpusUseCase,
)
from app.cli.parser import build_parser
from app.cli.schemas import CliConfig, Command, ensure_output_dir
from app.core.exceptions import InvalidInputError, StarRepresentationException
from app.core.logging import log
from app.domain.entities import ManifestEntry
from app.infrastructure.storage import FileArtifactStore, FileClipRepository, read_manifest

EXIT_OK = 0
EXIT_PARTIAL_FAILURE = 1


def emit(document: Dict[str, Any]):
    """Write one JSON summary line to standard output."""
    sys.stdout.write(json.dumps(document, sort_keys=True, separators=(",", ":")) + "\n")
    sys.stdout.flush()


def _select_entry(entries: List[ManifestEntry], clip_id: Optional[str], manifest: str) -> ManifestEntry:
    if clip_id is None:
        if len(entries) != 1:
            raise InvalidInputError(
                f"{manifest} has {len(entries)} entries; choose one with --clip-id",
                {"entries": len(entries)}
            )
        return entries[0]
    for entry in entries:
        if entry.clip_id == clip_id:
            return entry
    raise InvalidInputError(f"No entry '{clip_id}' in {manifest}", {"clip_id": clip_id})


def cmd_encode(config: CliConfig) -> int:
    encode_config = config.encode_config()
    transform = config.transform_spec()

    if config.manifest is not None:
        repository = FileClipRepository(Path(config.manifest).parent)
        entry = _select_entry(read_manifest(Path(config.manifest)), config.clip_id, config.manifest)
    elif config.source is not None:
        repository = FileClipRepository()
        entry = repository.entry_for_source(config.source, config.clip_id)
    else:
        raise InvalidInputError("encode needs SOURCE or --manifest")

    out_dir = ensure_output_dir(config.out)
    summary = EncodeClipUseCase(repository, FileArtifactStore()).execute(
        EncodeRequest(
            entry=entry,
            config=encode_config,
            out_dir=str(out_dir),
            reverse=config.reverse,
            transform=transform,
            transform_name=config.augment,
            seed=config.seed,
        )
    )
    emit(summary.model_dump(mode="json"))
    return EXIT_OK


def cmd_batch(config: CliConfig) -> int:
    encode_config = config.encode_config()
    transform = config.transform_spec()
    entries = read_manifest(Path(config.manifest))
    out_dir = ensure_output_dir(config.out)

    use_case = BatchEncodeUseCase(
        repository_factory=FileClipRepository,
        store_factory=FileArtifactStore,
        base_dir=str(Path(config.manifest).parent),
    )
    report = use_case.execute(
        entries,
        out_dir=str(out_dir),
        config=encode_config,
        jobs=config.jobs,
        seed=config.seed,
        transform=transform,
        transform_name=config.augment,
    )
    emit({
        "entries": len(report.entries),
        "succeeded": report.succeeded,
        "failed": report.failed,
        "failures": [o.clip_id for o in report.entries if o.status != "ok"],
        "jobs": report.jobs,
        "report": str(out_dir / "report.json"),
        "wall_time_s": round(report.wall_time_s, 6),
    })
    return EXIT_PARTIAL_FAILURE if report.failed else EXIT_OK


def cmd_segment(config: CliConfig) -> int:
    entries = read_manifest(Path(config.manifest))
    out_dir = ensure_output_dir(config.out)
    report = SegmentCorpusUseCase(FileClipRepository(Path(config.manifest).parent)).execute(entries, str(out_dir))
    emit(report.model_dump(mode="json"))
    return EXIT_PARTIAL_FAILURE if report.failed else EXIT_OK


def cmd_compare(config: CliConfig) -> int:
    out_dir = str(ensure_output_dir(config.out)) if config.out is not None else None
    path_a, path_b = config.images
    summary = CompareImagesUseCase(FileArtifactStore()).execute(path_a, path_b, out_dir, swap_rb=config.swap_rb)
    emit(summary.model_dump(mode="json"))
    return EXIT_OK


def cmd_fuse(config: CliConfig) -> int:
    out_dir = str(ensure_output_dir(config.out)) if config.out is not None else None
    summary = FuseFeaturesUseCase(FileArtifactStore()).execute(
        config.vectors,
        mode=config.fusion_mode(),
        params_path=config.params,
        seed=config.seed,
        out_dir=out_dir,
        write_params=config.write_params,
    )
    emit(summary.model_dump(mode="json"))
    return EXIT_OK


HANDLERS: Dict[Command, Callable[[CliConfig], int]] = {
    Command.ENCODE: cmd_encode,
    Command.BATCH: cmd_batch,
    Command.SEGMENT: cmd_segment,
    Command.COMPARE: cmd_compare,
    Command.FUSE: cmd_fuse,
}


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse argv and dispatch to a handler.

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors, 0 for --help
        return int(e.code or 0)

    try:
        config = CliConfig.from_namespace(args)
        log.debug(f"Running {config.command.value}")
        return HANDLERS[config.command](config)
    except StarRepresentationException as e:
        log.debug(f"{type(e).__name__}: {e.details}")
        sys.stderr.write(f"error: {e.message}\n")
        return e.exit_code
    except Exception as e:
        log.exception(f"Unexpected error: {str(e)}")
        sys.stderr.write(f"error: {type(e).__name__}: {e}\n")
        return EXIT_PARTIAL_FAILURE
