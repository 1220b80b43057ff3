"""
Base Predictor Class
====================
Common interface for every pixel predictor.

Each predictor has two entry points that must agree bit-exactly:

- predict(n): one pixel, plain Python ints (decoder path)
- predict_plane(n): a CausalNeighborhood of int64 arrays (encoder path)

All specific predictors inherit from PredictorBase; one global instance
of each is registered in ``gradpix.predictors``.
"""

from abc import ABC, abstractmethod

import numpy as np

from gradpix.schemas.predictor import CausalNeighborhood, PredictorId


def clamp(value: int, bit_depth: int) -> int:
    """Clamp to [0, 2**bit_depth - 1]."""
    max_value = (1 << bit_depth) - 1
    if value < 0:
        return 0
    if value > max_value:
        return max_value
    return value


class PredictorBase(ABC):
    """
    Base predictor.

    Subclasses implement ``_predict`` (ints) and ``_predict_plane`` (arrays);
    this class applies the clamp to the sample range in both paths.
    """

    predictor_id: PredictorId

    def predict(self, n: CausalNeighborhood) -> int:
        return clamp(self._predict(n), n.bit_depth)

    def predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        max_value = (1 << n.bit_depth) - 1
        return np.clip(self._predict_plane(n), 0, max_value)

    @abstractmethod
    def _predict(self, n: CausalNeighborhood) -> int:
        ...

    @abstractmethod
    def _predict_plane(self, n: CausalNeighborhood) -> np.ndarray:
        ...

    @property
    def tag(self) -> str:
        return self.predictor_id.tag

    def __repr__(self):
        return f"<{type(self).__name__}(tag='{self.tag}')>"
