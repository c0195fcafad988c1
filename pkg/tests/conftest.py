"""Shared fixtures."""
from pathlib import Path

import numpy as np
import pytest

from app.domain.entities import FeatureVector, ScorerParams
from app.infrastructure.storage import FileArtifactStore, FileClipRepository
from tests.synthetic import manifest_line, moving_square_frames, random_frames, write_container, write_frame_dir

FIXTURES = Path(__file__).parent / "fixtures"

# Hand-evaluated soft-attention result for the toy maps and params:
# u = 1 / sqrt(2/3 + 1e-5); scores (0.5 + u, 0.5); softmax; weighted raw sum.
TOY_WEIGHTS = (0.7728959, 0.2271041)
TOY_FUSED = (1.4542082, 2.0, 2.5457918)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240518)


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def store() -> FileArtifactStore:
    return FileArtifactStore()


@pytest.fixture
def toy_params() -> ScorerParams:
    return ScorerParams(w1=[[0.0], [0.0], [1.0]], b1=[0.0], w2=[1.0], b2=0.5)


@pytest.fixture
def toy_maps():
    return [FeatureVector.of([1.0, 2.0, 3.0]), FeatureVector.of([3.0, 2.0, 1.0])]


@pytest.fixture
def corpus(tmp_path: Path):
    """
    Three clips on disk: two frame directories and one raw container, plus a manifest.

    Returns (manifest path, {clip_id: frames}).
    """
    generator = np.random.default_rng(7)
    clips = {
        "walk": moving_square_frames(12),
        "wave": np.round(random_frames(generator, 9, 10, 14)),
        "stop": np.round(random_frames(generator, 14, 8, 8)),
    }
    write_frame_dir(tmp_path / "frames" / "walk", clips["walk"])
    write_frame_dir(tmp_path / "frames" / "wave", clips["wave"])
    write_container(tmp_path / "stop.strv", clips["stop"])

    manifest = tmp_path / "corpus.jsonl"
    manifest.write_text(
        "\n".join([
            manifest_line("walk", "frames/walk", 1, 12, "walk"),
            manifest_line("wave", "frames/wave", 1, 9, "wave"),
            manifest_line("stop", "stop.strv", 1, 14, "stop"),
        ]) + "\n",
        encoding="utf-8",
    )
    return manifest, clips


@pytest.fixture
def clip_repository(tmp_path: Path) -> FileClipRepository:
    return FileClipRepository(tmp_path)
