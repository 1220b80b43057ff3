"""
Predictor Schemas
=================
Predictor identities, causal neighborhoods and gradient pairs.
"""

import enum
from typing import NamedTuple

from pydantic import BaseModel, Field


class PredictorId(int, enum.Enum):
    """Predictor ids as stored in the container header."""
    ZERO = 0
    WEST = 1
    NORTH = 2
    AVERAGE = 3
    MED = 4
    GED = 5
    GAP = 6

    @property
    def tag(self) -> str:
        return _TAGS[self]

    @classmethod
    def from_tag(cls, tag: str) -> "PredictorId":
        try:
            return _BY_TAG[tag.lower()]
        except KeyError:
            raise ValueError(f"unknown predictor tag '{tag}'") from None


_TAGS = {
    PredictorId.ZERO: "zero",
    PredictorId.WEST: "west",
    PredictorId.NORTH: "north",
    PredictorId.AVERAGE: "average",
    PredictorId.MED: "med",
    PredictorId.GED: "ged",
    PredictorId.GAP: "gap",
}
_BY_TAG = {tag: pid for pid, tag in _TAGS.items()}

DEFAULT_GED_THRESHOLD = 8


class PredictorKind(BaseModel):
    """A predictor variant plus its parameters (only GED has one)."""
    model_config = {"frozen": True}

    variant: PredictorId
    ged_threshold: int = Field(
        DEFAULT_GED_THRESHOLD,
        ge=-32768,
        le=32767,
        description="GED threshold T; stored as i16 in the header",
    )

    @property
    def tag(self) -> str:
        return self.variant.tag

    @property
    def label(self) -> str:
        """Tag used in reports; GED with a non-default threshold reads ``ged@T``."""
        if self.variant is PredictorId.GED and self.ged_threshold != DEFAULT_GED_THRESHOLD:
            return f"ged@{self.ged_threshold}"
        return self.tag

    @classmethod
    def from_tag(cls, tag: str, ged_threshold: int = DEFAULT_GED_THRESHOLD) -> "PredictorKind":
        return cls(variant=PredictorId.from_tag(tag), ged_threshold=ged_threshold)


class CausalNeighborhood(NamedTuple):
    """
    The seven causal samples around the current pixel.

    A NamedTuple rather than a pydantic model: the decoder builds one per
    pixel. The same field layout holds whole numpy planes on the encoder side.
    """
    W: int
    N: int
    NW: int
    NE: int
    WW: int
    NN: int
    NNE: int
    bit_depth: int = 8

    @classmethod
    def uniform(cls, value: int, bit_depth: int = 8) -> "CausalNeighborhood":
        return cls(value, value, value, value, value, value, value, bit_depth)


class GradientPair(BaseModel):
    g_v: int = Field(..., ge=0)
    g_h: int = Field(..., ge=0)

    @property
    def difference(self) -> int:
        return self.g_v - self.g_h
