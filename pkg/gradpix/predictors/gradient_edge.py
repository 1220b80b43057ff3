"""
GED Predictor
=============
Threshold-controlled gradient edge detection, with A = W, B = N, C = NW,
D = WW, E = NN:

    g_v = |C - A| + |E - B|
    g_h = |D - A| + |C - B|

    g_v - g_h >  T -> A
    g_v - g_h < -T -> B
    otherwise      -> 3(A + B)/8 + (C + D + E)/12

The blend uses one common denominator, floor((9(A + B) + 2(C + D + E)) / 24),
so a constant neighborhood predicts itself exactly.
"""

import numpy as np

from gradpix.predictors.base import PredictorBase
from gradpix.schemas.predictor import (
    DEFAULT_GED_THRESHOLD,
    CausalNeighborhood,
    GradientPair,
    PredictorId,
)


def ged_gradients(n: CausalNeighborhood) -> GradientPair:
    return GradientPair(
        g_v=abs(n.NW - n.W) + abs(n.NN - n.N),
        g_h=abs(n.WW - n.W) + abs(n.NW - n.N),
    )


def ged(a: int, b: int, c: int, d: int, e: int, threshold: int) -> int:
    diff = (abs(c - a) + abs(e - b)) - (abs(d - a) + abs(c - b))
    if diff > threshold:
        return a
    if diff < -threshold:
        return b
    return (9 * (a + b) + 2 * (c + d + e)) // 24


class GedPredictor(PredictorBase):
    predictor_id = PredictorId.GED

    def __init__(self, threshold: int = DEFAULT_GED_THRESHOLD):
        self.threshold = threshold

    def _predict(self, n: CausalNeighborhood) -> int:
        return ged(n.W, n.N, n.NW, n.WW, n.NN, self.threshold)

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        a, b, c, d, e = n.W, n.N, n.NW, n.WW, n.NN
        diff = (np.abs(c - a) + np.abs(e - b)) - (np.abs(d - a) + np.abs(c - b))
        blend = (9 * (a + b) + 2 * (c + d + e)) // 24
        return np.select([diff > self.threshold, diff < -self.threshold], [a, b], default=blend)

    def __repr__(self):
        return f"<GedPredictor(threshold={self.threshold})>"
