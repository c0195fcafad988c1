"""
File-system artifact store: PNG images, float sidecars and fusion parameters.

Sidecar layout: a compact, key-sorted JSON header line, then little-endian
float32 samples, channel-planar and row-major.
"""
import json
from pathlib import Path
from typing import Any, Dict, Tuple

import numpy as np
from PIL import Image, UnidentifiedImageError
from pydantic import ValidationError

from app.core.config import settings
from app.core.exceptions import InvalidFeatureError, InvalidParamsError, StorageError
from app.core.logging import log
from app.domain.entities import FeatureVector, ScorerParams
from app.domain.repositories import IArtifactStore

SIDECAR_SUFFIX = ".star"
SIDECAR_DTYPE = np.dtype("<f4")
PNG_COMPRESS_LEVEL = 6


def _header_line(header: Dict[str, Any]) -> bytes:
    return json.dumps(header, sort_keys=True, separators=(",", ":")).encode("utf-8") + b"\n"


def _dimension(header: Dict[str, Any], key: str) -> int:
    value = header[key]
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValueError(f"bad '{key}': {value!r}")
    return value


class FileArtifactStore(IArtifactStore):
    """File-system implementation of the artifact store."""

    def write_png(self, path: str, image: np.ndarray) -> str:
        array = np.asarray(image, dtype=np.uint8)
        if array.ndim == 3 and array.shape[2] == 1:
            array = array[..., 0]
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            Image.fromarray(array).save(target, format="PNG", compress_level=PNG_COMPRESS_LEVEL)
        except OSError as e:
            raise StorageError(f"Failed to write {target}: {e}", {"path": str(target)})
        return str(target)

    def write_sidecar(self, path: str, planes: np.ndarray, header: Dict[str, Any]) -> str:
        planes = np.asarray(planes, dtype=np.float64)
        if planes.ndim == 2:
            planes = planes[..., np.newaxis]
        height, width, channels = planes.shape
        full_header = {**header, "width": width, "height": height, "channels": channels}
        payload = np.ascontiguousarray(planes.transpose(2, 0, 1), dtype=SIDECAR_DTYPE).tobytes()

        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_bytes(_header_line(full_header) + payload)
        except OSError as e:
            raise StorageError(f"Failed to write {target}: {e}", {"path": str(target)})
        return str(target)

    def read_sidecar(self, path: str) -> Tuple[Dict[str, Any], np.ndarray]:
        source = Path(path)
        try:
            raw = source.read_bytes()
        except OSError as e:
            raise StorageError(f"Failed to read {source}: {e}", {"path": str(source)})

        newline = raw.find(b"\n")
        try:
            if newline < 0:
                raise ValueError("missing header line")
            header = json.loads(raw[:newline].decode("utf-8"))
            if not isinstance(header, dict):
                raise ValueError("header is not a JSON object")
            width, height, channels = (_dimension(header, key) for key in ("width", "height", "channels"))
            data = np.frombuffer(raw, dtype=SIDECAR_DTYPE, offset=newline + 1)
            if data.size != width * height * channels:
                raise ValueError(f"expected {width * height * channels} samples, found {data.size}")
            planes = data.reshape(channels, height, width).transpose(1, 2, 0).astype(np.float64)
        except (ValueError, KeyError, TypeError, UnicodeDecodeError) as e:
            raise StorageError(f"Malformed sidecar {source}: {e}", {"path": str(source)})

        return header, planes

    def read_image(self, path: str) -> Tuple[Dict[str, Any], np.ndarray]:
        source = Path(path)
        if source.suffix == SIDECAR_SUFFIX:
            return self.read_sidecar(str(source))
        try:
            with Image.open(source) as image:
                array = np.asarray(image, dtype=np.float64)
        except (OSError, UnidentifiedImageError) as e:
            raise StorageError(f"Failed to read {source}: {e}", {"path": str(source)})
        if array.ndim == 2:
            array = array[..., np.newaxis]
        height, width, channels = array.shape
        header = {"width": width, "height": height, "channels": channels, "kind": "png"}

        sidecar = source.with_suffix(SIDECAR_SUFFIX)
        if sidecar.is_file():
            sidecar_header, planes = self.read_sidecar(str(sidecar))
            if planes.shape == array.shape and sidecar_header.get("augment", "none") == "none":
                log.info(f"Using float sidecar {sidecar} in place of {source}")
                return sidecar_header, planes
            log.warning(f"Ignoring sidecar {sidecar}: it does not hold the pixels of {source}")
        return header, array

    def write_json(self, path: str, document: Dict[str, Any]) -> str:
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(json.dumps(document, sort_keys=True, indent=2) + "\n", encoding="utf-8")
        except OSError as e:
            raise StorageError(f"Failed to write {target}: {e}", {"path": str(target)})
        return str(target)

    def load_params(self, path: str) -> ScorerParams:
        source = Path(path)
        try:
            document = json.loads(source.read_text(encoding="utf-8"))
        except OSError as e:
            raise StorageError(f"Failed to read {source}: {e}", {"path": str(source)})
        except ValueError as e:
            raise InvalidParamsError(f"Malformed params file {source}: {e}", {"path": str(source)})

        if not isinstance(document, dict):
            raise InvalidParamsError("Params file must hold a JSON object", {"path": str(source)})
        version = document.get("format_version")
        if version != settings.params_format_version:
            raise InvalidParamsError(
                f"Unsupported params format_version {version!r}",
                {"expected": settings.params_format_version}
            )
        try:
            d = int(document["d"])
            b1 = np.asarray(document["b1"], dtype=np.float64)
            w1 = np.asarray(document["w1"], dtype=np.float64).reshape(d, b1.shape[0])
            b2 = np.asarray(document.get("b2", 0.0), dtype=np.float64).reshape(-1)
            if b2.size != 1:
                raise ValueError("b2 must be a single value")
            return ScorerParams(w1=w1, b1=b1, w2=document["w2"], b2=float(b2[0]))
        except (KeyError, TypeError, ValueError, ValidationError) as e:
            raise InvalidParamsError(f"Invalid params file {source}: {e}", {"path": str(source)})

    def save_params(self, path: str, params: ScorerParams) -> str:
        document = {
            "format_version": settings.params_format_version,
            "d": params.d,
            "hidden": params.hidden,
            "w1": params.w1.ravel().tolist(),
            "b1": params.b1.tolist(),
            "w2": params.w2.tolist(),
            "b2": params.b2,
        }
        target = Path(path)
        try:
            target.parent.mkdir(parents=True, exist_ok=True)
            target.write_text(json.dumps(document, sort_keys=True), encoding="utf-8")
        except OSError as e:
            raise StorageError(f"Failed to write {target}: {e}", {"path": str(target)})
        return str(target)

    def load_feature_vector(self, path: str) -> FeatureVector:
        source = Path(path)
        if source.suffix == SIDECAR_SUFFIX:
            _, planes = self.read_sidecar(str(source))
            values = planes.transpose(2, 0, 1).ravel()
        else:
            try:
                document = json.loads(source.read_text(encoding="utf-8"))
            except OSError as e:
                raise StorageError(f"Failed to read {source}: {e}", {"path": str(source)})
            except ValueError as e:
                raise InvalidFeatureError(f"Malformed feature file {source}: {e}", {"path": str(source)})
            values = document.get("values") if isinstance(document, dict) else document
        try:
            return FeatureVector(values=values)
        except (ValidationError, TypeError, ValueError) as e:
            raise InvalidFeatureError(f"Invalid feature vector in {source}: {e}", {"path": str(source)})
