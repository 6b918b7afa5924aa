"""Shared array conventions and validation helpers.

Conventions used everywhere in this package:

* images are float arrays of shape (H, W, C) with C in {1, 3} and values
  in [0, 1]
* offset fields are (N, H, W, 2) arrays of per-pixel displacements, N odd
* flow maps are (H, W, 2) arrays holding a single vector per pixel
* a displacement is stored (dx, dy): dx moves along columns (x, rightward),
  dy along rows (y, downward); an offset (dx, dy) at output pixel (x, y)
  samples the source at (x + dx, y + dy) -- backward warping
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import DimensionError, EvenStepCountError, TooSmallError


class BoundaryMode(Enum):
    """How sampling coordinates outside the raster are treated."""

    CLAMP_TO_EDGE = "clamp"
    ZERO_OUTSIDE = "zero"


def as_image(arr, name="image") -> np.ndarray:
    """Validate and return an (H, W, C) float64 image.

    2-D input is promoted to a single channel. Values must be finite;
    range is the caller's business (losses and warps run on anything
    finite, file output clamps).
    """
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim == 2:
        a = a[:, :, None]
    if a.ndim != 3 or a.shape[2] not in (1, 3):
        raise DimensionError(f"{name}: expected (H, W, C) with C in {{1, 3}}, got {a.shape}")
    if a.shape[0] < 2 or a.shape[1] < 2:
        raise TooSmallError(f"{name}: need at least 2x2 pixels, got {a.shape[0]}x{a.shape[1]}")
    if not np.all(np.isfinite(a)):
        raise DimensionError(f"{name}: contains non-finite samples")
    return a


def as_offsets(arr, name="offsets") -> np.ndarray:
    """Validate and return an (N, H, W, 2) float64 offset field with N odd."""
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim != 4 or a.shape[3] != 2:
        raise DimensionError(f"{name}: expected (N, H, W, 2), got {a.shape}")
    if a.shape[0] % 2 == 0:
        raise EvenStepCountError(f"{name}: step count N={a.shape[0]} must be odd")
    if not np.all(np.isfinite(a)):
        raise DimensionError(f"{name}: contains non-finite values")
    return a


def as_flow(arr, name="flow") -> np.ndarray:
    """Validate and return an (H, W, 2) float64 flow map."""
    a = np.asarray(arr, dtype=np.float64)
    if a.ndim != 3 or a.shape[2] != 2:
        raise DimensionError(f"{name}: expected (H, W, 2), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise DimensionError(f"{name}: contains non-finite values")
    return a


def require_odd(n: int, minimum: int = 1, name: str = "N") -> int:
    """Check a step count is an odd integer >= minimum."""
    n = int(n)
    if n % 2 == 0:
        raise EvenStepCountError(f"{name}={n} must be odd")
    if n < minimum:
        raise EvenStepCountError(f"{name}={n} must be >= {minimum}")
    return n


def pixel_grid(height: int, width: int):
    """Return (X, Y) float64 coordinate grids, X along columns, Y along rows."""
    ys, xs = np.mgrid[0:height, 0:width].astype(np.float64)
    return xs, ys
