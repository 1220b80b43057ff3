"""
Image Schemas
=============
Pydantic models for decoded rasters and noise parameters.
"""

import enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator


class SyntheticKind(str, enum.Enum):
    """Synthetic image families."""
    FLAT_EDGES = "flat_edges"
    RAMP = "ramp"
    UNIFORM_NOISE = "uniform_noise"


class RasterImage(BaseModel):
    """
    Decoded pixel grid; the unit of compression.

    ``samples`` is a flat uint array in channel-planar, row-major order:
    all of channel 0, then channel 1, ...
    """
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    width: int = Field(..., ge=1, description="Width in pixels")
    height: int = Field(..., ge=1, description="Height in pixels")
    channels: int = Field(..., description="1 (grayscale) or 3 (RGB)")
    bit_depth: int = Field(..., description="Bits per sample, 8 or 16")
    samples: np.ndarray = Field(..., description="Channel-planar samples")

    @field_validator("channels")
    @classmethod
    def validate_channels(cls, v: int) -> int:
        if v not in (1, 3):
            raise ValueError("channels must be 1 or 3")
        return v

    @field_validator("bit_depth")
    @classmethod
    def validate_bit_depth(cls, v: int) -> int:
        if v not in (8, 16):
            raise ValueError("bit_depth must be 8 or 16")
        return v

    @field_validator("samples", mode="before")
    @classmethod
    def coerce_samples(cls, v):
        arr = np.array(v, copy=True)
        if arr.dtype.kind not in "iu":
            raise ValueError("samples must be integers")
        if arr.size and (arr.min() < 0):
            raise ValueError("samples must be unsigned")
        return arr.reshape(-1)

    @model_validator(mode="after")
    def check_invariants(self) -> "RasterImage":
        expected = self.width * self.height * self.channels
        if self.samples.size != expected:
            raise ValueError(
                f"samples has {self.samples.size} values, expected {expected} "
                f"({self.width}x{self.height}x{self.channels})"
            )
        if self.samples.size and int(self.samples.max()) > self.max_value:
            raise ValueError(f"sample exceeds {self.bit_depth}-bit range")
        dtype = np.uint8 if self.bit_depth == 8 else np.uint16
        if self.samples.dtype != dtype:
            object.__setattr__(self, "samples", self.samples.astype(dtype))
        self.samples.setflags(write=False)
        return self

    @property
    def max_value(self) -> int:
        return (1 << self.bit_depth) - 1

    @property
    def planes(self) -> np.ndarray:
        """Samples viewed as (channels, height, width)."""
        return self.samples.reshape(self.channels, self.height, self.width)

    def plane(self, channel: int) -> np.ndarray:
        return self.planes[channel]

    @property
    def raw_size(self) -> int:
        """Bytes needed to store the samples uncompressed."""
        return self.samples.size * (self.bit_depth // 8)

    def same_as(self, other: "RasterImage") -> bool:
        return (
            self.width == other.width
            and self.height == other.height
            and self.channels == other.channels
            and self.bit_depth == other.bit_depth
            and np.array_equal(self.samples, other.samples)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RasterImage):
            return NotImplemented
        return self.same_as(other)

    __hash__ = None

    def __repr__(self):
        return (
            f"<RasterImage({self.width}x{self.height}, channels={self.channels}, "
            f"bit_depth={self.bit_depth})>"
        )


class NoiseSpec(BaseModel):
    """
    Gaussian noise parameters.

    variance is measured on the normalized [0, 1] intensity scale; any
    finite value >= 0 is accepted.
    """
    variance: float = Field(
        ..., ge=0.0, allow_inf_nan=False, description="Variance of the normalized noise"
    )
    seed: int = Field(0, ge=0, lt=2**64, description="64-bit RNG seed")
