"""
Predictors
==========
Global predictor instances and the dispatch operations.
"""

from functools import lru_cache

from gradpix.predictors.base import PredictorBase
from gradpix.predictors.gradient_adjusted import GapPredictor
from gradpix.predictors.gradient_edge import GedPredictor
from gradpix.predictors.median_edge import MedPredictor
from gradpix.predictors.neighborhood import gather, neighborhood_at, plane_neighborhoods
from gradpix.predictors.simple import (
    AveragePredictor,
    NorthPredictor,
    WestPredictor,
    ZeroPredictor,
)
from gradpix.schemas.predictor import (
    DEFAULT_GED_THRESHOLD,
    CausalNeighborhood,
    PredictorId,
    PredictorKind,
)

# One instance per parameterless predictor
zero = ZeroPredictor()
west = WestPredictor()
north = NorthPredictor()
average = AveragePredictor()
med = MedPredictor()
gap = GapPredictor()

_FIXED = {
    PredictorId.ZERO: zero,
    PredictorId.WEST: west,
    PredictorId.NORTH: north,
    PredictorId.AVERAGE: average,
    PredictorId.MED: med,
    PredictorId.GAP: gap,
}


@lru_cache(maxsize=64)
def _ged(threshold: int) -> GedPredictor:
    return GedPredictor(threshold)


def get_predictor(kind: PredictorKind) -> PredictorBase:
    """Predictor instance for ``kind`` (GED instances are cached per threshold)."""
    if kind.variant is PredictorId.GED:
        return _ged(kind.ged_threshold)
    return _FIXED[kind.variant]


def predict(kind: PredictorKind, n: CausalNeighborhood) -> int:
    return get_predictor(kind).predict(n)


def predict_med(n: CausalNeighborhood) -> int:
    return med.predict(n)


def predict_gap(n: CausalNeighborhood) -> int:
    return gap.predict(n)


def predict_ged(n: CausalNeighborhood, threshold: int = DEFAULT_GED_THRESHOLD) -> int:
    # Thresholds outside i16 are allowed here (degenerate-threshold checks)
    return GedPredictor(threshold).predict(n)


__all__ = [
    "PredictorBase",
    "ZeroPredictor", "WestPredictor", "NorthPredictor", "AveragePredictor",
    "MedPredictor", "GedPredictor", "GapPredictor",
    "get_predictor", "predict", "predict_med", "predict_gap", "predict_ged",
    "gather", "neighborhood_at", "plane_neighborhoods",
]
