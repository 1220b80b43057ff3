"""
Container Schemas
=================
Header and payload layout of a ``.gpx`` container.
"""

from typing import List

from pydantic import BaseModel, Field

from gradpix.schemas.predictor import PredictorId

MAGIC = b"GPX1"
FORMAT_VERSION = 1
# magic(4) version(1) width(4) height(4) channels(1) bit_depth(1) predictor(1) threshold(2) crc(4)
HEADER_SIZE = 22


class ContainerHeader(BaseModel):
    """Fixed-size header; every multi-byte field is little-endian."""
    model_config = {"frozen": True}

    version: int = Field(FORMAT_VERSION, ge=0, le=255)
    width: int = Field(..., ge=1, lt=2**32)
    height: int = Field(..., ge=1, lt=2**32)
    channels: int = Field(..., ge=1, le=255)
    bit_depth: int = Field(..., ge=1, le=255)
    predictor_id: PredictorId
    ged_threshold: int = Field(8, ge=-32768, le=32767)
    checksum: int = Field(..., ge=0, lt=2**32, description="CRC-32 of the raw samples")


class CompressedContainer(BaseModel):
    """Header plus one entropy-coded payload per channel."""
    model_config = {"frozen": True}

    header: ContainerHeader
    payloads: List[bytes]

    @property
    def payload_lengths(self) -> List[int]:
        return [len(p) for p in self.payloads]
