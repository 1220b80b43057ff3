"""
Container Format
================
Byte layout of a ``.gpx`` file (little-endian):

    magic "GPX1" | version u8 | width u32 | height u32 | channels u8 |
    bit_depth u8 | predictor_id u8 | ged_threshold i16 | checksum u32 |
    per channel: payload_len u32 + payload bytes
"""

import struct
import zlib
from pathlib import Path
from typing import Union

import numpy as np
from pydantic import ValidationError

from gradpix.core.exceptions import (
    BadMagicError,
    ContainerError,
    CorruptContainerError,
    TruncatedPayloadError,
    VersionMismatchError,
)
from gradpix.schemas.container import (
    FORMAT_VERSION,
    HEADER_SIZE,
    MAGIC,
    CompressedContainer,
    ContainerHeader,
)
from gradpix.schemas.predictor import PredictorId

_HEADER = struct.Struct("<4sBIIBBBhI")
_LENGTH = struct.Struct("<I")

assert _HEADER.size == HEADER_SIZE


def sample_checksum(samples: np.ndarray, bit_depth: int) -> int:
    """CRC-32 of the samples in stored order (u8, or little-endian u16)."""
    dtype = "<u1" if bit_depth == 8 else "<u2"
    return zlib.crc32(np.ascontiguousarray(samples, dtype=dtype).tobytes()) & 0xFFFFFFFF


def serialize_container(container: CompressedContainer) -> bytes:
    h = container.header
    parts = [
        _HEADER.pack(
            MAGIC,
            h.version,
            h.width,
            h.height,
            h.channels,
            h.bit_depth,
            int(h.predictor_id),
            h.ged_threshold,
            h.checksum,
        )
    ]
    for payload in container.payloads:
        parts.append(_LENGTH.pack(len(payload)))
        parts.append(payload)
    return b"".join(parts)


def parse_container(data: bytes) -> CompressedContainer:
    """
    Parse and validate container bytes.

    Raises:
        BadMagicError, VersionMismatchError, TruncatedPayloadError,
        CorruptContainerError
    """
    if len(data) <= len(MAGIC):
        raise TruncatedPayloadError(f"{len(data)} byte(s), too short for a header")
    if data[: len(MAGIC)] != MAGIC:
        raise BadMagicError(bytes(data[: len(MAGIC)]))
    if data[len(MAGIC)] != FORMAT_VERSION:
        raise VersionMismatchError(data[len(MAGIC)], FORMAT_VERSION)
    if len(data) < HEADER_SIZE:
        raise TruncatedPayloadError(f"header needs {HEADER_SIZE} bytes, got {len(data)}")

    _, version, width, height, channels, bit_depth, predictor_id, threshold, checksum = (
        _HEADER.unpack_from(data, 0)
    )
    if channels not in (1, 3):
        raise CorruptContainerError(f"invalid channel count {channels}")
    if bit_depth not in (8, 16):
        raise CorruptContainerError(f"invalid bit depth {bit_depth}")
    try:
        header = ContainerHeader(
            version=version,
            width=width,
            height=height,
            channels=channels,
            bit_depth=bit_depth,
            predictor_id=PredictorId(predictor_id),
            ged_threshold=threshold,
            checksum=checksum,
        )
    except (ValueError, ValidationError) as exc:
        raise CorruptContainerError(f"invalid header: {exc}") from exc

    offset = HEADER_SIZE
    payloads = []
    for channel in range(channels):
        if offset + _LENGTH.size > len(data):
            raise TruncatedPayloadError(f"missing length of channel {channel}")
        (length,) = _LENGTH.unpack_from(data, offset)
        offset += _LENGTH.size
        if offset + length > len(data):
            raise TruncatedPayloadError(
                f"channel {channel} declares {length} bytes, {len(data) - offset} available"
            )
        payloads.append(bytes(data[offset : offset + length]))
        offset += length
    if offset != len(data):
        raise CorruptContainerError(f"{len(data) - offset} trailing byte(s) after the last channel")

    return CompressedContainer(header=header, payloads=payloads)


def write_container(container: CompressedContainer, path: Union[str, Path]) -> int:
    """Write the container; returns its size in bytes."""
    data = serialize_container(container)
    try:
        Path(path).write_bytes(data)
    except OSError as exc:
        raise ContainerError(f"cannot write container {path}: {exc}") from exc
    return len(data)


def read_container(path: Union[str, Path]) -> CompressedContainer:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise ContainerError(f"cannot read container {path}: {exc}") from exc
    return parse_container(data)
