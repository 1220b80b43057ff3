"""
Corrected MED Predictor
=======================
Median edge detection with A = W, B = N, C = NW:

    if C >= max(A, B):   P = max(A, B)
    elif C <= min(A, B): P = min(A, B)
    else:                P = A + B - C

The first two branches are the mirror of LOCO-I's MED (which predicts
min when C >= max). This is the "corrected" variant and is kept as is.
"""

import numpy as np

from gradpix.predictors.base import PredictorBase
from gradpix.schemas.predictor import CausalNeighborhood, PredictorId


def med(a: int, b: int, c: int) -> int:
    if a > b:
        hi, lo = a, b
    else:
        hi, lo = b, a
    if c >= hi:
        return hi
    if c <= lo:
        return lo
    return a + b - c


class MedPredictor(PredictorBase):
    predictor_id = PredictorId.MED

    def _predict(self, n: CausalNeighborhood) -> int:
        return med(n.W, n.N, n.NW)

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        a, b, c = n.W, n.N, n.NW
        hi = np.maximum(a, b)
        lo = np.minimum(a, b)
        return np.where(c >= hi, hi, np.where(c <= lo, lo, a + b - c))
