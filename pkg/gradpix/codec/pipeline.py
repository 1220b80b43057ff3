"""
Codec Pipeline
==============
Lossless encode/decode of a RasterImage.

Per channel plane, in raster order:
  neighborhood -> prediction -> wrapped residual -> zigzag fold
  -> (context, code) -> adaptive range coder

The encoder computes predictions and contexts for the whole plane with
numpy; the decoder rebuilds them pixel by pixel from already decoded
samples. Everything the decoder needs is in the container header.
"""

import logging

import numpy as np
from pydantic import ValidationError

from gradpix.codec.container import parse_container, sample_checksum, serialize_container
from gradpix.codec.context import NUM_CONTEXTS, ContextModel, context_of, context_plane
from gradpix.codec.range_coder import RangeDecoder, RangeEncoder
from gradpix.codec.residual import fold_plane, unfold_residual
from gradpix.core.exceptions import ChecksumMismatchError, CorruptContainerError, InvalidImageError
from gradpix.predictors import get_predictor, gather, plane_neighborhoods
from gradpix.predictors.base import PredictorBase
from gradpix.schemas.container import CompressedContainer, ContainerHeader
from gradpix.schemas.image import RasterImage
from gradpix.schemas.predictor import PredictorKind

logger = logging.getLogger(__name__)

# Upper bound on symbols per payload byte: no symbol costs less than
# -log2(1 - 255/65536) bits under the adaptive model
MAX_SYMBOLS_PER_BYTE = 2048


# ========================
# ENCODER
# ========================
def encode_image(img: RasterImage, kind: PredictorKind) -> CompressedContainer:
    """Compress ``img`` with predictor ``kind``; each channel is coded independently."""
    predictor = get_predictor(kind)
    payloads = [encode_plane(img.plane(c), img.bit_depth, predictor) for c in range(img.channels)]
    header = ContainerHeader(
        width=img.width,
        height=img.height,
        channels=img.channels,
        bit_depth=img.bit_depth,
        predictor_id=kind.variant,
        ged_threshold=kind.ged_threshold,
        checksum=sample_checksum(img.samples, img.bit_depth),
    )
    logger.debug(
        "encoded %r with %s: %s payload bytes", img, kind.tag, [len(p) for p in payloads]
    )
    return CompressedContainer(header=header, payloads=payloads)


def encode_plane(plane: np.ndarray, bit_depth: int, predictor: PredictorBase) -> bytes:
    mask = (1 << bit_depth) - 1
    nb = plane_neighborhoods(plane, bit_depth)
    predicted = predictor.predict_plane(nb)
    residuals = (plane.astype(np.int64) - predicted) & mask
    codes = fold_plane(residuals, bit_depth).ravel().tolist()
    contexts = context_plane(nb).ravel().tolist()

    model = ContextModel.for_bit_depth(bit_depth)
    encoder = RangeEncoder()
    if bit_depth == 8:
        tables = model.tables
        for context, code in zip(contexts, codes):
            encoder.encode_symbol(tables[context], code)
    else:
        for context, code in zip(contexts, codes):
            _encode_wide(encoder, model, context, code)
    return encoder.finish()


def _encode_wide(encoder: RangeEncoder, model: ContextModel, context: int, code: int) -> None:
    high = code >> 8
    encoder.encode_symbol(model[context], high)
    encoder.encode_symbol(model[_low_table(context, high)], code & 0xFF)


def _decode_wide(decoder: RangeDecoder, model: ContextModel, context: int) -> int:
    high = decoder.decode_symbol(model[context])
    return (high << 8) | decoder.decode_symbol(model[_low_table(context, high)])


def _low_table(context: int, high: int) -> int:
    return (NUM_CONTEXTS if high == 0 else 2 * NUM_CONTEXTS) + context


# ========================
# DECODER
# ========================
def decode_image(container: CompressedContainer) -> RasterImage:
    """
    Exact inverse of encode_image.

    Raises:
        CoderDesyncError: a payload ran out early or was not fully consumed
        ChecksumMismatchError: decoded samples do not match the header CRC
        CorruptContainerError: header claims more samples than a payload can hold
    """
    h = container.header
    kind = PredictorKind(variant=h.predictor_id, ged_threshold=h.ged_threshold)
    predictor = get_predictor(kind)

    symbols_per_plane = h.width * h.height * (1 if h.bit_depth == 8 else 2)
    for channel, payload in enumerate(container.payloads):
        if symbols_per_plane > MAX_SYMBOLS_PER_BYTE * (len(payload) + 8):
            raise CorruptContainerError(
                f"channel {channel}: {h.width}x{h.height} pixels cannot fit in {len(payload)} bytes"
            )

    planes = [
        decode_plane(payload, h.width, h.height, h.bit_depth, predictor)
        for payload in container.payloads
    ]
    samples = np.concatenate([p.reshape(-1) for p in planes])
    actual = sample_checksum(samples, h.bit_depth)
    if actual != h.checksum:
        raise ChecksumMismatchError(h.checksum, actual)

    try:
        return RasterImage(
            width=h.width,
            height=h.height,
            channels=h.channels,
            bit_depth=h.bit_depth,
            samples=samples,
        )
    except ValidationError as exc:
        raise InvalidImageError(str(exc)) from exc


def decode_plane(
    payload: bytes, width: int, height: int, bit_depth: int, predictor: PredictorBase
) -> np.ndarray:
    mask = (1 << bit_depth) - 1
    model = ContextModel.for_bit_depth(bit_depth)
    tables = model.tables
    decoder = RangeDecoder(payload)
    predict = predictor.predict
    wide = bit_depth != 8

    rows = [[0] * width for _ in range(height)]
    for y in range(height):
        row = rows[y]
        for x in range(width):
            nb = gather(rows, x, y, width, bit_depth)
            context = context_of(nb)
            if wide:
                code = _decode_wide(decoder, model, context)
            else:
                code = decoder.decode_symbol(tables[context])
            row[x] = (predict(nb) + unfold_residual(code, bit_depth)) & mask
    decoder.finish()
    return np.asarray(rows, dtype=np.int64)


# ========================
# BYTES CONVENIENCE
# ========================
def encode_to_bytes(img: RasterImage, kind: PredictorKind) -> bytes:
    return serialize_container(encode_image(img, kind))


def decode_bytes(data: bytes) -> RasterImage:
    return decode_image(parse_container(data))
