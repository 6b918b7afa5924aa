"""Raster and trajectory-file I/O.

Images are 8-bit PNG (grayscale or RGB), mapped to [0, 1] by /255 on load
and written back with round-half-away-from-zero. Offset and trajectory
fields use the ETRF container:

    magic   "ETRF"           4 bytes
    version u32 = 1
    mode    u8               0 raw offsets, 1 linear, 2 bd-linear, 3 quadratic
    pad     3 bytes
    N, H, W u32 each
    payload little-endian f32

Payload layout: mode 0 stores N*H*W*2 values [n][row][col][(dx, dy)];
mode 1 stores H*W*2 endpoint parameters; modes 2-3 store H*W*4
(dx1, dy1, dx2, dy2). Payload values round-trip bit-exactly at float32
precision.
"""

from __future__ import annotations

import struct

import numpy as np
from PIL import Image as PILImage

from .core import as_image, as_offsets
from .errors import DimensionError, FormatError, TooSmallError
from .trajectory import ConstraintMode, TrajectoryField

_MAGIC = b"ETRF"
_VERSION = 1
_HEADER = struct.Struct("<4sIB3xIII")

_MODE_CODES = {
    ConstraintMode.ZERO: 0,
    ConstraintMode.LINEAR: 1,
    ConstraintMode.BD_LINEAR: 2,
    ConstraintMode.QUADRATIC: 3,
}
_CODE_MODES = {v: k for k, v in _MODE_CODES.items()}


def load_image(path) -> np.ndarray:
    """Load an 8-bit grayscale or RGB raster as an (H, W, C) array in [0, 1]."""
    try:
        with PILImage.open(path) as im:
            mode = im.mode
            if mode not in ("L", "RGB"):
                raise FormatError(f"{path}: unsupported raster mode {mode!r} (need 8-bit L or RGB)")
            data = np.asarray(im, dtype=np.uint8)
    except FileNotFoundError:
        raise
    except (OSError, FormatError):
        raise
    except Exception as exc:  # Pillow decoding quirks
        raise FormatError(f"{path}: {exc}") from exc
    if data.ndim == 2:
        data = data[:, :, None]
    if data.shape[0] < 2 or data.shape[1] < 2:
        raise TooSmallError(f"{path}: image {data.shape[1]}x{data.shape[0]} below 2x2 minimum")
    return data.astype(np.float64) / 255.0


def quantize_image(img) -> np.ndarray:
    """Clamp to [0, 1] and quantize to the 8-bit grid, returned as floats.

    Applying this before rendering makes in-memory results byte-identical
    to a save/load round trip.
    """
    img = as_image(img)
    return _to_bytes(img).astype(np.float64) / 255.0


def _to_bytes(img: np.ndarray) -> np.ndarray:
    clamped = np.clip(img, 0.0, 1.0)
    # round half away from zero; np.round would round half to even
    return np.floor(clamped * 255.0 + 0.5).astype(np.uint8)


def save_image(img, path) -> None:
    """Write an image as 8-bit PNG, clamping samples into [0, 1] first."""
    a = np.asarray(img, dtype=np.float64)
    if a.ndim == 2:
        a = a[:, :, None]
    if a.ndim != 3 or a.shape[2] not in (1, 3):
        raise DimensionError(f"image: expected (H, W, C) with C in {{1, 3}}, got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DimensionError("image: contains non-finite samples")
    data = _to_bytes(a)
    if data.shape[2] == 1:
        pil = PILImage.fromarray(data[:, :, 0], mode="L")
    else:
        pil = PILImage.fromarray(data, mode="RGB")
    pil.save(path, format="PNG")


def write_offsets(field, path, n_steps: int | None = None) -> None:
    """Serialize an offset field (array) or TrajectoryField to an ETRF file.

    Raw (N, H, W, 2) arrays and ZERO-mode trajectories are written as mode 0.
    For constrained trajectories the header N records the field's native
    step count unless overridden via ``n_steps``.
    """
    if isinstance(field, TrajectoryField):
        mode = field.mode
        n = int(n_steps) if n_steps is not None else field.n_steps
        h, w = field.height, field.width
        payload = field.params
        if mode is ConstraintMode.ZERO:
            mode_code = 0
            n = field.n_steps
        else:
            mode_code = _MODE_CODES[mode]
    else:
        offsets = as_offsets(field)
        mode_code = 0
        n, h, w = offsets.shape[0], offsets.shape[1], offsets.shape[2]
        payload = offsets
    if n % 2 == 0:
        raise DimensionError(f"header N={n} must be odd")
    header = _HEADER.pack(_MAGIC, _VERSION, mode_code, n, h, w)
    raw = np.ascontiguousarray(payload, dtype="<f4").tobytes()
    with open(path, "wb") as fh:
        fh.write(header)
        fh.write(raw)


def read_offsets(path):
    """Read an ETRF file.

    Returns a raw (N, H, W, 2) offset array for mode 0 and a
    TrajectoryField for modes 1-3.
    """
    with open(path, "rb") as fh:
        blob = fh.read()
    if len(blob) < _HEADER.size:
        raise FormatError(f"{path}: truncated header")
    magic, version, mode_code, n, h, w = _HEADER.unpack_from(blob)
    if magic != _MAGIC:
        raise FormatError(f"{path}: bad magic {magic!r}")
    if version != _VERSION:
        raise FormatError(f"{path}: unsupported version {version}")
    if mode_code not in _CODE_MODES:
        raise FormatError(f"{path}: unknown mode byte {mode_code}")
    if n % 2 == 0:
        raise DimensionError(f"{path}: header N={n} must be odd")
    if mode_code == 0:
        count = n * h * w * 2
    elif mode_code == 1:
        count = h * w * 2
    else:
        count = h * w * 4
    expected = _HEADER.size + 4 * count
    if len(blob) != expected:
        raise DimensionError(f"{path}: payload is {len(blob) - _HEADER.size} bytes, expected {4 * count}")
    values = np.frombuffer(blob, dtype="<f4", offset=_HEADER.size).astype(np.float64)
    if not np.all(np.isfinite(values)):
        raise FormatError(f"{path}: payload contains non-finite values")
    mode = _CODE_MODES[mode_code]
    if mode_code == 0:
        return values.reshape(n, h, w, 2)
    per_pixel = 2 if mode_code == 1 else 4
    params = values.reshape(h, w, per_pixel)
    return TrajectoryField(mode=mode, params=params, n_steps=n)
