"""
Wall-clock budgets for encoding, batch scaling and the property suites.

Timing depends on the host, so these tests only run on request:

    pytest -m benchmark
"""
import os
import time

import numpy as np
import pytest

from app.application.services import encode_star_rgb, reverse_clip, split_segments
from app.application.use_cases import BatchEncodeUseCase
from app.domain.entities import ClipSource, DistanceMetric, EncodeConfig, ManifestEntry
from app.domain.services import cosine_terms, euclidean_distance_map, fuse, gray_difference_map
from app.infrastructure.storage import FileArtifactStore, FileClipRepository
from tests import oracle
from tests.synthetic import as_grid, random_clip, random_frames, write_container
from tests.test_attention_fusion import _random_case
from tests.test_star_encoder import FIXTURE_SHAPES

pytestmark = pytest.mark.benchmark

BATCH_CLIPS = 50


def _elapsed(action) -> float:
    started = time.perf_counter()
    action()
    return time.perf_counter() - started


def _batch(tmp_path, frames, jobs: int, out_name: str):
    write_container(tmp_path / "clip.strv", frames)
    entries = [
        ManifestEntry(clip_id=f"c{k:02d}", source="clip.strv", start_frame=1, end_frame=len(frames))
        for k in range(BATCH_CLIPS)
    ]
    use_case = BatchEncodeUseCase(FileClipRepository, FileArtifactStore, base_dir=str(tmp_path))
    return use_case.execute(entries, out_dir=str(tmp_path / out_name), config=EncodeConfig(), jobs=jobs)


def test_star_rgb_encode_of_a_full_size_clip_under_50ms(rng):
    clip = random_clip(rng, 40, 120, 160)
    encode_star_rgb(clip)
    best = min(_elapsed(lambda: encode_star_rgb(clip)) for _ in range(5))
    assert best < 0.050


@pytest.mark.skipif((os.cpu_count() or 1) < 4, reason="needs at least 4 cores")
def test_batch_scales_with_four_workers(tmp_path, rng):
    frames = np.round(random_frames(rng, 40, 120, 160))
    serial = _batch(tmp_path, frames, jobs=1, out_name="serial")
    parallel = _batch(tmp_path, frames, jobs=4, out_name="parallel")
    assert serial.failed == 0 and parallel.failed == 0
    assert serial.wall_time_s / parallel.wall_time_s >= 3.0


def test_batch_of_fifty_clips_under_30s(tmp_path, rng):
    frames = np.round(random_frames(rng, 8, 8, 8))
    report = _batch(tmp_path, frames, jobs=os.cpu_count() or 1, out_name="out")
    assert report.succeeded == BATCH_CLIPS
    assert report.wall_time_s < 30.0


def test_reference_equivalence_under_5s(rng):
    def run():
        for height, width, n in FIXTURE_SHAPES:
            frames = np.round(random_frames(rng, n, height, width))
            for metric in DistanceMetric:
                encoded = encode_star_rgb(ClipSource.from_array(frames), EncodeConfig(metric=metric)).as_array()
                expected = np.moveaxis(np.asarray(oracle.star_rgb(as_grid(frames), metric.value)), 0, -1)
                np.testing.assert_allclose(encoded, expected, rtol=1e-9, atol=1e-9)

    assert _elapsed(run) < 5.0


def test_reversal_checks_under_2s(rng):
    def run():
        clip = random_clip(rng, 30, 32, 32)
        forward = encode_star_rgb(clip)
        backward = encode_star_rgb(reverse_clip(clip))
        np.testing.assert_allclose(forward.as_array(), backward.swap_red_blue().as_array(), rtol=1e-9, atol=1e-9)

    assert _elapsed(run) < 2.0


def test_exhaustive_segment_rule_under_1s():
    def run():
        for n in range(6, 1001):
            lengths = [segment.length for segment in split_segments(n)]
            assert lengths == [n // 3, n - 2 * (n // 3), n // 3]

    assert _elapsed(run) < 1.0


def test_metric_property_suite_under_5s(rng):
    def run():
        a = rng.uniform(0, 255, size=(10_000, 3))
        b = rng.uniform(0, 255, size=(10_000, 3))
        np.testing.assert_allclose(euclidean_distance_map(a, b), euclidean_distance_map(b, a))
        np.testing.assert_allclose(gray_difference_map(a, b), gray_difference_map(b, a))
        lam, _, _ = cosine_terms(a, b)
        assert ((1.0 - lam / 2.0 >= 0.5) & (1.0 - lam / 2.0 <= 1.0)).all()

    assert _elapsed(run) < 5.0


def test_fusion_contract_under_10s(rng):
    def run():
        for _ in range(1000):
            maps, params = _random_case(rng)
            assert sum(fuse(maps, params).weights) == pytest.approx(1.0, abs=1e-6)

    assert _elapsed(run) < 10.0
