"""
Synthetic Test Images
=====================
Deterministic generators for the proxy corpus:

- flat_edges: constant-color axis-aligned rectangles over a constant
  background (sharp edges between flat areas)
- ramp: horizontal linear gradient
- uniform_noise: i.i.d. uniform samples
"""

import logging
from pathlib import Path
from typing import List, Optional, Union

import numpy as np

from gradpix.core.exceptions import ImageWriteError, InvalidImageError
from gradpix.image.png_io import save_png
from gradpix.schemas.image import RasterImage, SyntheticKind

logger = logging.getLogger(__name__)

MIN_RECTANGLES = 4
MAX_RECTANGLES = 32


def generate_synthetic(
    kind: Union[SyntheticKind, str],
    width: int,
    height: int,
    seed: int = 0,
    *,
    channels: int = 1,
    bit_depth: int = 8,
    rectangles: Optional[int] = None,
) -> RasterImage:
    """
    Generate one synthetic image.

    Args:
        kind: flat_edges, ramp or uniform_noise
        seed: RNG seed; same arguments always give the same image
        rectangles: flat_edges only; defaults to a seeded draw in [4, 32]
    """
    kind = SyntheticKind(kind)
    if width < 1 or height < 1:
        raise InvalidImageError(f"image dimensions must be positive, got {width}x{height}")
    if channels not in (1, 3) or bit_depth not in (8, 16):
        raise InvalidImageError(f"unsupported layout: {channels} channel(s), {bit_depth}-bit")

    rng = np.random.default_rng(seed)
    max_value = (1 << bit_depth) - 1

    if kind is SyntheticKind.RAMP:
        row = _ramp_row(width, max_value)
        planes = np.broadcast_to(row, (channels, height, width))
    elif kind is SyntheticKind.UNIFORM_NOISE:
        planes = rng.integers(0, max_value + 1, size=(channels, height, width), dtype=np.int64)
    else:
        planes = _flat_edges(rng, width, height, channels, max_value, rectangles)

    return RasterImage(
        width=width,
        height=height,
        channels=channels,
        bit_depth=bit_depth,
        samples=np.ascontiguousarray(planes).reshape(-1),
    )


def _ramp_row(width: int, max_value: int) -> np.ndarray:
    if width == 1:
        return np.zeros(1, dtype=np.int64)
    x = np.arange(width, dtype=np.int64)
    return x * max_value // (width - 1)


def _flat_edges(
    rng: np.random.Generator,
    width: int,
    height: int,
    channels: int,
    max_value: int,
    rectangles: Optional[int],
) -> np.ndarray:
    if rectangles is None:
        rectangles = int(rng.integers(MIN_RECTANGLES, MAX_RECTANGLES + 1))
    if rectangles < 0:
        raise InvalidImageError(f"rectangle count must be non-negative, got {rectangles}")

    background = rng.integers(0, max_value + 1, size=channels)
    planes = np.empty((channels, height, width), dtype=np.int64)
    planes[:] = background[:, None, None]

    for _ in range(rectangles):
        x0, x1 = np.sort(rng.integers(0, width + 1, size=2))
        y0, y1 = np.sort(rng.integers(0, height + 1, size=2))
        color = rng.integers(0, max_value + 1, size=channels)
        planes[:, y0:y1, x0:x1] = color[:, None, None]
    return planes


def generate_directory(
    output_dir: Path,
    kind: Union[SyntheticKind, str],
    count: int,
    width: int,
    height: int,
    seed: int = 0,
    *,
    channels: int = 1,
    bit_depth: int = 8,
) -> List[Path]:
    """Write ``count`` synthetic PNGs named ``<kind>_<i>.png``; image i uses seed ``seed + i``."""
    kind = SyntheticKind(kind)
    output_dir = Path(output_dir)
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ImageWriteError(f"cannot create output directory {output_dir}: {exc}") from exc
    written = []
    for index in range(count):
        img = generate_synthetic(
            kind, width, height, (seed + index) % 2**64, channels=channels, bit_depth=bit_depth
        )
        target = output_dir / f"{kind.value}_{index:04d}.png"
        save_png(img, target)
        written.append(target)
    logger.info("wrote %d %s image(s) to %s", len(written), kind.value, output_dir)
    return written
