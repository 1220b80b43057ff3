"""
Causal Neighborhoods
====================
Extracts W, N, NW, NE, WW, NN, NNE around a pixel.

Border rule (positions outside the image):
  W   -> N (left column), or 0 at (0, 0)
  N   -> W (top row)
  NW  -> N
  NE  -> N (right column)
  WW  -> W
  NN  -> N
  NNE -> NE
"""

from typing import Sequence

import numpy as np

from gradpix.core.exceptions import NeighborhoodError
from gradpix.schemas.image import RasterImage
from gradpix.schemas.predictor import CausalNeighborhood


def gather(rows: Sequence[Sequence[int]], x: int, y: int, width: int, bit_depth: int) -> CausalNeighborhood:
    """
    Neighborhood of (x, y) from ``rows[y][x]``-indexable samples.

    Only rows ``<= y`` and, on row ``y``, columns ``< x`` are read, so the
    decoder can call this on a partially reconstructed plane.
    """
    row = rows[y]
    if y > 0:
        up = rows[y - 1]
        n = up[x]
        w = row[x - 1] if x > 0 else n
        nw = up[x - 1] if x > 0 else n
        ne = up[x + 1] if x + 1 < width else n
        if y > 1:
            up2 = rows[y - 2]
            nn = up2[x]
            nne = up2[x + 1] if x + 1 < width else ne
        else:
            nn = n
            nne = ne
    else:
        w = row[x - 1] if x > 0 else 0
        n = nw = ne = nn = nne = w
    ww = row[x - 2] if x > 1 else w
    return CausalNeighborhood(w, n, nw, ne, ww, nn, nne, bit_depth)


def neighborhood_at(img: RasterImage, channel: int, x: int, y: int) -> CausalNeighborhood:
    """Causal neighborhood of pixel (x, y) in one channel of ``img``."""
    if not 0 <= channel < img.channels:
        raise NeighborhoodError(f"channel {channel} out of range (image has {img.channels})")
    if not (0 <= x < img.width and 0 <= y < img.height):
        raise NeighborhoodError(f"pixel ({x}, {y}) outside {img.width}x{img.height} image")
    plane = img.plane(channel)
    nb = gather(plane, x, y, img.width, img.bit_depth)
    return CausalNeighborhood(*(int(v) for v in nb[:7]), img.bit_depth)


def plane_neighborhoods(plane: np.ndarray, bit_depth: int) -> CausalNeighborhood:
    """
    Neighborhoods of every pixel of an (h, w) plane at once.

    Returns a CausalNeighborhood whose fields are int64 (h, w) arrays,
    following the same border rule as ``gather``.
    """
    p = plane.astype(np.int64)

    w = np.zeros_like(p)
    w[:, 1:] = p[:, :-1]
    w[1:, 0] = p[:-1, 0]

    n = np.empty_like(p)
    n[1:, :] = p[:-1, :]
    n[0, :] = w[0, :]

    nw = n.copy()
    nw[1:, 1:] = p[:-1, :-1]

    ne = n.copy()
    ne[1:, :-1] = p[:-1, 1:]

    ww = w.copy()
    ww[:, 2:] = p[:, :-2]

    nn = n.copy()
    nn[2:, :] = p[:-2, :]

    nne = ne.copy()
    nne[2:, :-1] = p[:-2, 1:]

    return CausalNeighborhood(w, n, nw, ne, ww, nn, nne, bit_depth)
