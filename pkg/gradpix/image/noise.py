"""
Gaussian Noise Injection
========================
Seeded additive Gaussian noise for the noisy-corpus experiments.
"""

import logging
import math
from pathlib import Path
from typing import List

import numpy as np

from gradpix.core.exceptions import ImageError, ImageWriteError
from gradpix.image.png_io import load_png, save_png
from gradpix.schemas.image import NoiseSpec, RasterImage
from gradpix.utils.helpers import list_pngs

logger = logging.getLogger(__name__)


def add_gaussian_noise(img: RasterImage, spec: NoiseSpec) -> RasterImage:
    """
    Add zero-mean Gaussian noise to every sample independently.

    ``spec.variance`` is on the normalized [0, 1] intensity scale, so the
    noise added to a sample is ``n * M`` with ``n ~ N(0, variance)`` and
    ``M = 2**bit_depth - 1``. Results are rounded (half to even) and
    clipped to [0, M]. Same (img, spec) always gives the same output.
    """
    if spec.variance == 0:
        return img.model_copy()

    rng = np.random.default_rng(spec.seed)
    noise = rng.normal(0.0, math.sqrt(spec.variance), size=img.samples.size)
    noisy = np.rint(img.samples.astype(np.float64) + noise * img.max_value)
    noisy = np.clip(noisy, 0, img.max_value)
    return RasterImage(
        width=img.width,
        height=img.height,
        channels=img.channels,
        bit_depth=img.bit_depth,
        samples=noisy.astype(np.int64),
    )


def noise_directory(input_dir: Path, output_dir: Path, variance: float, seed: int = 0) -> List[Path]:
    """
    Write a noisy copy of every PNG in ``input_dir`` to ``output_dir``.

    The i-th image (sorted by name) uses seed ``seed + i`` so images of the
    same size do not share a noise pattern. Unreadable images are skipped.
    """
    output_dir = Path(output_dir)
    try:
        output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ImageWriteError(f"cannot create output directory {output_dir}: {exc}") from exc
    written = []
    for index, path in enumerate(list_pngs(input_dir)):
        try:
            img = load_png(path)
        except ImageError as exc:
            logger.warning("skipping %s: %s", path.name, exc.detail)
            continue
        spec = NoiseSpec(variance=variance, seed=(seed + index) % 2**64)
        target = output_dir / path.name
        save_png(add_gaussian_noise(img, spec), target)
        written.append(target)
    logger.info("wrote %d noisy image(s) (variance %g) to %s", len(written), variance, output_dir)
    return written
