"""Raw containers, frame directories, sidecars and parameter files."""
import json

import numpy as np
import pytest

from app.core.exceptions import (
    InvalidFeatureError,
    InvalidInputError,
    InvalidParamsError,
    MissingFrameError,
    StorageError,
)
from app.domain.entities import ManifestEntry
from app.domain.services import init_params
from app.infrastructure.storage import FileClipRepository, raw_container
from tests.synthetic import random_frames, write_frame_dir


def test_container_round_trip(tmp_path, rng):
    frames = np.round(random_frames(rng, 5, 3, 4))
    path = raw_container.write_container(tmp_path / "clip.strv", list(frames))

    header, _ = raw_container.read_header(path)
    assert header == {"frame_count": 5, "height": 3, "width": 4}
    decoded = raw_container.read_frames(path, 2, 4)
    assert len(decoded) == 3
    np.testing.assert_array_equal(decoded[0], frames[1])
    assert decoded[0][0, 0].tolist() == frames[1][0, 0].tolist()


def test_container_layout_is_channel_planar(tmp_path):
    frame = np.zeros((1, 2, 3))
    frame[0, 0] = (1, 2, 3)
    frame[0, 1] = (4, 5, 6)
    path = raw_container.write_container(tmp_path / "one.strv", [frame, frame])
    payload = path.read_bytes().split(b"\n", 2)[2]
    assert list(payload[:6]) == [1, 4, 2, 5, 3, 6]
    assert path.read_bytes().startswith(b"STRV1\n")


def test_container_quantizes_half_up(tmp_path):
    frame = np.full((1, 1, 3), 10.5)
    path = raw_container.write_container(tmp_path / "q.strv", [frame, frame])
    assert raw_container.read_frames(path, 1, 1)[0][0, 0].tolist() == [11.0, 11.0, 11.0]


def test_container_missing_frame(tmp_path, rng):
    path = raw_container.write_container(tmp_path / "c.strv", list(random_frames(rng, 4, 2, 2)))
    with pytest.raises(MissingFrameError, match="missing frame 5"):
        raw_container.read_frames(path, 2, 6)


def test_container_rejects_foreign_files(tmp_path):
    bogus = tmp_path / "bogus.strv"
    bogus.write_bytes(b"GIF89a....")
    with pytest.raises(StorageError):
        raw_container.read_header(bogus)


@pytest.mark.parametrize("header_line", [
    b"[1,2]",
    b'"text"',
    b'{"frame_count":2,"height":true,"width":2}',
    b'{"width":-1}',
])
def test_container_rejects_malformed_headers(tmp_path, header_line):
    path = tmp_path / "bad.strv"
    path.write_bytes(raw_container.MAGIC + header_line + b"\n")
    with pytest.raises(StorageError, match="Malformed container header"):
        raw_container.read_header(path)


def test_directory_clip_selects_range(tmp_path, rng):
    frames = np.round(random_frames(rng, 10, 4, 5))
    write_frame_dir(tmp_path / "s1", frames)
    repo = FileClipRepository(tmp_path)
    clip = repo.load_clip(ManifestEntry(clip_id="g", source="s1", start_frame=3, end_frame=7, label="x"))
    assert clip.frame_count == 5
    assert clip.label == "x"
    np.testing.assert_array_equal(clip.frames[0].data, frames[2])


def test_directory_missing_frame(tmp_path, rng):
    write_frame_dir(tmp_path / "s1", np.round(random_frames(rng, 10, 2, 2)))
    repo = FileClipRepository(tmp_path)
    with pytest.raises(MissingFrameError, match="missing frame 11"):
        repo.load_clip(ManifestEntry(clip_id="g", source="s1", start_frame=8, end_frame=11))


def test_missing_source_is_storage_error(tmp_path):
    with pytest.raises(StorageError) as excinfo:
        FileClipRepository(tmp_path).load_clip(ManifestEntry(clip_id="g", source="nope", start_frame=1, end_frame=2))
    assert excinfo.value.exit_code == 3


def test_entry_for_source(tmp_path, rng):
    write_frame_dir(tmp_path / "clipdir", np.round(random_frames(rng, 7, 2, 2)))
    raw_container.write_container(tmp_path / "c.strv", list(random_frames(rng, 9, 2, 2)))
    repo = FileClipRepository()

    entry = repo.entry_for_source(str(tmp_path / "clipdir"))
    assert (entry.clip_id, entry.start_frame, entry.end_frame) == ("clipdir", 1, 7)
    entry = repo.entry_for_source(str(tmp_path / "c.strv"), clip_id="named")
    assert (entry.clip_id, entry.end_frame) == ("named", 9)

    (tmp_path / "empty").mkdir()
    with pytest.raises(InvalidInputError):
        repo.entry_for_source(str(tmp_path / "empty"))


def test_write_frames_round_trip(tmp_path, rng):
    frames = np.round(random_frames(rng, 3, 4, 4))
    repo = FileClipRepository(tmp_path)
    written = repo.write_frames(str(tmp_path / "out"), list(frames))
    assert [p.rsplit("/", 1)[-1] for p in written] == ["00001.png", "00002.png", "00003.png"]
    clip = repo.load_clip(repo.entry_for_source("out"))
    np.testing.assert_array_equal(clip.stack(), frames)


def test_sidecar_round_trip(tmp_path, store, rng):
    planes = rng.uniform(0, 1000, size=(3, 4, 3))
    path = store.write_sidecar(str(tmp_path / "a.b.star"), planes, {"clip_id": "a.b", "kind": "star_rgb"})
    header, decoded = store.read_sidecar(path)
    assert (header["width"], header["height"], header["channels"]) == (4, 3, 3)
    assert header["clip_id"] == "a.b"
    np.testing.assert_allclose(decoded, planes, rtol=1e-6)


def test_sidecar_header_is_sorted_compact_json(tmp_path, store):
    path = store.write_sidecar(str(tmp_path / "s.star"), np.ones((1, 2)), {"kind": "star_gray", "clip_id": "s"})
    first_line = open(path, "rb").read().split(b"\n", 1)[0]
    assert first_line == b'{"channels":1,"clip_id":"s","height":1,"kind":"star_gray","width":2}'
    assert len(open(path, "rb").read()) == len(first_line) + 1 + 2 * 4


def test_truncated_sidecar(tmp_path, store):
    path = tmp_path / "t.star"
    path.write_bytes(b'{"channels":1,"height":2,"width":2}\n\x00\x00')
    with pytest.raises(StorageError):
        store.read_sidecar(str(path))


@pytest.mark.parametrize("header_line", [
    b"[1,2,3]",
    b"{\"channels\":1,\"height\":-2,\"width\":-2}",
    b"{\"channels\":1,\"height\":2.5,\"width\":2}",
    b"{\"channels\":1,\"height\":2}",
])
def test_sidecar_rejects_malformed_headers(tmp_path, store, header_line):
    path = tmp_path / "bad.star"
    path.write_bytes(header_line + b"\n" + b"\x00" * 16)
    with pytest.raises(StorageError, match="Malformed sidecar"):
        store.read_sidecar(str(path))


def test_read_image_prefers_sidecar(tmp_path, store):
    planes = np.full((2, 2, 3), 0.25)
    store.write_png(str(tmp_path / "x.png"), np.zeros((2, 2, 3), dtype=np.uint8))
    store.write_sidecar(str(tmp_path / "x.star"), planes, {"kind": "star_rgb"})
    header, data = store.read_image(str(tmp_path / "x.png"))
    assert header["kind"] == "star_rgb"
    np.testing.assert_allclose(data, planes)


def test_read_image_ignores_sidecar_of_another_shape(tmp_path, store):
    image = np.arange(12, dtype=np.uint8).reshape(2, 2, 3)
    store.write_png(str(tmp_path / "x.png"), image)
    store.write_sidecar(str(tmp_path / "x.star"), np.ones((3, 3, 3)), {"kind": "star_rgb"})
    header, data = store.read_image(str(tmp_path / "x.png"))
    assert header["kind"] == "png"
    np.testing.assert_array_equal(data, image)


def test_read_image_ignores_sidecar_of_augmented_output(tmp_path, store):
    image = np.arange(12, dtype=np.uint8).reshape(2, 2, 3)
    store.write_png(str(tmp_path / "x.png"), image)
    store.write_sidecar(str(tmp_path / "x.star"), np.ones((2, 2, 3)), {"kind": "star_rgb", "augment": "grit"})
    header, data = store.read_image(str(tmp_path / "x.png"))
    assert header["kind"] == "png"
    np.testing.assert_array_equal(data, image)


def test_read_png(tmp_path, store):
    image = np.arange(12, dtype=np.uint8).reshape(2, 2, 3)
    store.write_png(str(tmp_path / "p.png"), image)
    header, data = store.read_image(str(tmp_path / "p.png"))
    assert header["kind"] == "png"
    np.testing.assert_array_equal(data, image)


def test_params_round_trip(tmp_path, store):
    params = init_params(5, seed=1, hidden=3)
    path = store.save_params(str(tmp_path / "p.json"), params)
    document = json.loads(open(path).read())
    assert document["format_version"] == 1 and document["d"] == 5 and document["hidden"] == 3
    loaded = store.load_params(path)
    np.testing.assert_array_equal(loaded.w1, params.w1)
    assert loaded.b2 == params.b2


def test_toy_params_fixture(fixtures_dir, store):
    params = store.load_params(str(fixtures_dir / "toy_scorer_params.json"))
    assert (params.d, params.hidden, params.b2) == (3, 1, 0.5)


@pytest.mark.parametrize("document", [
    {"format_version": 2, "d": 1, "w1": [1], "b1": [0], "w2": [1], "b2": 0},
    {"format_version": 1, "d": 2, "w1": [1, 2, 3], "b1": [0], "w2": [1], "b2": 0},
    {"format_version": 1, "d": 1, "w1": [1], "b1": [0], "w2": [1, 2], "b2": 0},
    {"format_version": 1, "d": 1, "w1": [1], "b1": [0], "w2": [1], "b2": [1, 2]},
    [1, 2, 3],
])
def test_malformed_params(tmp_path, store, document):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(document))
    with pytest.raises(InvalidParamsError):
        store.load_params(str(path))


def test_feature_vector_formats(tmp_path, store, fixtures_dir):
    assert store.load_feature_vector(str(fixtures_dir / "toy_m1.json")).values.tolist() == [1.0, 2.0, 3.0]
    assert store.load_feature_vector(str(fixtures_dir / "toy_m2.json")).values.tolist() == [3.0, 2.0, 1.0]
    sidecar = store.write_sidecar(str(tmp_path / "v.star"), np.array([[[0.5], [1.5]]]), {"kind": "fused_vector"})
    assert store.load_feature_vector(sidecar).values.tolist() == [0.5, 1.5]

    bad = tmp_path / "bad.json"
    bad.write_text('{"values": []}')
    with pytest.raises(InvalidFeatureError):
        store.load_feature_vector(str(bad))
