"""
Simple Predictors
=================
Zero, West, North and Average: the reference points the gradient
predictors are compared against.
"""

import numpy as np

from gradpix.predictors.base import PredictorBase
from gradpix.schemas.predictor import CausalNeighborhood, PredictorId


class ZeroPredictor(PredictorBase):
    predictor_id = PredictorId.ZERO

    def _predict(self, n: CausalNeighborhood) -> int:
        return 0

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        return np.zeros_like(n.W)


class WestPredictor(PredictorBase):
    predictor_id = PredictorId.WEST

    def _predict(self, n: CausalNeighborhood) -> int:
        return n.W

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        return n.W.copy()


class NorthPredictor(PredictorBase):
    predictor_id = PredictorId.NORTH

    def _predict(self, n: CausalNeighborhood) -> int:
        return n.N

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        return n.N.copy()


class AveragePredictor(PredictorBase):
    """floor((W + N) / 2)"""
    predictor_id = PredictorId.AVERAGE

    def _predict(self, n: CausalNeighborhood) -> int:
        return (n.W + n.N) // 2

    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        return (n.W + n.N) // 2
