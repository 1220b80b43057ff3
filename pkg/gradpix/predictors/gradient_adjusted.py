"""
GAP Predictor
=============
Gradient-adjusted prediction over the full seven-pixel neighborhood.

    g_v = |W - WW| + |N - NW| + |N - NE|
    g_h = |W - NW| + |N - NN| + |NE - NNE|

Hard edges (|g_v - g_h| > 80) predict W or N directly; otherwise a base
estimate (W + N)/2 + (NE - NW)/4 is pulled toward W or N in steps at
32 and 8. Every division is a floor division.
"""

import numpy as np

from gradpix.predictors.base import PredictorBase
from gradpix.schemas.predictor import CausalNeighborhood, GradientPair, PredictorId

SHARP_EDGE = 80
EDGE = 32
WEAK_EDGE = 8


def gap_gradients(n: CausalNeighborhood) -> GradientPair:
    return GradientPair(
        g_v=abs(n.W - n.WW) + abs(n.N - n.NW) + abs(n.N - n.NE),
        g_h=abs(n.W - n.NW) + abs(n.N - n.NN) + abs(n.NE - n.NNE),
    )


def gap(w: int, n: int, nw: int, ne: int, ww: int, nn: int, nne: int) -> int:
    d = (abs(w - ww) + abs(n - nw) + abs(n - ne)) - (abs(w - nw) + abs(n - nn) + abs(ne - nne))
    if d > SHARP_EDGE:
        return w
    if d < -SHARP_EDGE:
        return n
    p = (w + n) // 2 + (ne - nw) // 4
    if d > EDGE:
        return (p + w) // 2
    if d > WEAK_EDGE:
        return (3 * p + w) // 4
    if d < -EDGE:
        return (p + n) // 2
    if d < -WEAK_EDGE:
        return (3 * p + n) // 4
    return p


class GapPredictor(PredictorBase):
    predictor_id = PredictorId.GAP

    def _predict(self, n: CausalNeighborhood) -> int:
        return gap(n.W, n.N, n.NW, n.NE, n.WW, n.NN, n.NNE)

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        g_v = np.abs(n.W - n.WW) + np.abs(n.N - n.NW) + np.abs(n.N - n.NE)
        g_h = np.abs(n.W - n.NW) + np.abs(n.N - n.NN) + np.abs(n.NE - n.NNE)
        d = g_v - g_h

        p = (n.W + n.N) // 2 + (n.NE - n.NW) // 4
        refined = np.select(
            [d > EDGE, d > WEAK_EDGE, d < -EDGE, d < -WEAK_EDGE],
            [(p + n.W) // 2, (3 * p + n.W) // 4, (p + n.N) // 2, (3 * p + n.N) // 4],
            default=p,
        )
        return np.select([d > SHARP_EDGE, d < -SHARP_EDGE], [n.W, n.N], default=refined)
