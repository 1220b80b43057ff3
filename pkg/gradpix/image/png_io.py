"""
PNG Ingestion / Egestion
========================
Reads and writes 8/16-bit grayscale and truecolor PNGs via pypng.

Palette, alpha and interlaced files are rejected rather than converted,
so nothing is silently dropped on the way into a lossless codec.
"""

import logging
from pathlib import Path
from typing import Union

import numpy as np
import png
from pydantic import ValidationError

from gradpix.core.exceptions import (
    ImageReadError,
    ImageWriteError,
    InvalidImageError,
    UnsupportedImageError,
)
from gradpix.schemas.image import RasterImage

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def load_png(path: PathLike) -> RasterImage:
    """
    Decode a PNG file into a RasterImage.

    Raises:
        ImageReadError: file missing, unreadable or not a PNG
        UnsupportedImageError: palette, alpha, interlace or a bit depth other than 8/16
    """
    path = str(path)
    try:
        reader = png.Reader(filename=path)
        width, height, rows, info = reader.read()
    except (OSError, png.Error) as exc:
        raise ImageReadError(f"cannot read PNG {path}: {exc}") from exc

    # colour type 3 only; truecolour files may carry a suggested PLTE
    if reader.colormap:
        raise UnsupportedImageError("palette", path)
    if info.get("alpha"):
        raise UnsupportedImageError("alpha", path)
    if info.get("interlace"):
        raise UnsupportedImageError("interlaced", path)
    bit_depth = info["bitdepth"]
    if bit_depth not in (8, 16):
        raise UnsupportedImageError(f"{bit_depth}-bit samples", path)

    channels = info["planes"]
    dtype = np.uint8 if bit_depth == 8 else np.uint16
    try:
        pixels = np.vstack([np.asarray(row, dtype=dtype) for row in rows])
    except (png.Error, ValueError) as exc:
        raise ImageReadError(f"corrupt PNG data in {path}: {exc}") from exc

    # interleaved (h, w*c) -> planar (c, h, w)
    planar = pixels.reshape(height, width, channels).transpose(2, 0, 1)
    logger.debug("loaded %s: %dx%d, %d channel(s), %d-bit", path, width, height, channels, bit_depth)
    return RasterImage(
        width=width,
        height=height,
        channels=channels,
        bit_depth=bit_depth,
        samples=planar.reshape(-1),
    )


def save_png(img: RasterImage, path: PathLike) -> None:
    """Write ``img`` as a non-interlaced PNG that load_png decodes sample-identically."""
    interleaved = img.planes.transpose(1, 2, 0).reshape(img.height, img.width * img.channels)
    writer = png.Writer(
        width=img.width,
        height=img.height,
        greyscale=img.channels == 1,
        alpha=False,
        bitdepth=img.bit_depth,
    )
    try:
        with open(path, "wb") as f:
            writer.write(f, interleaved.tolist())
    except OSError as exc:
        raise ImageWriteError(f"cannot write PNG {path}: {exc}") from exc


def image_from_array(array: np.ndarray, bit_depth: int) -> RasterImage:
    """
    Build a RasterImage from an (h, w) or (c, h, w) integer array.

    Raises InvalidImageError instead of a pydantic ValidationError.
    """
    arr = np.asarray(array)
    if arr.ndim == 2:
        arr = arr[np.newaxis]
    if arr.ndim != 3:
        raise InvalidImageError(f"expected a 2-D or 3-D array, got shape {arr.shape}")
    channels, height, width = arr.shape
    try:
        return RasterImage(
            width=width,
            height=height,
            channels=channels,
            bit_depth=bit_depth,
            samples=arr.reshape(-1),
        )
    except ValidationError as exc:
        raise InvalidImageError(str(exc)) from exc
