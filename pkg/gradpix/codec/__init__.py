from gradpix.codec.residual import (
    ResidualSymbol,
    residual,
    reconstruct,
    fold_residual,
    unfold_residual,
)
from gradpix.codec.context import ContextModel, FrequencyTable, context_of, NUM_CONTEXTS
from gradpix.codec.range_coder import RangeEncoder, RangeDecoder, range_encode, range_decode
from gradpix.codec.container import (
    serialize_container,
    parse_container,
    read_container,
    write_container,
    sample_checksum,
)
from gradpix.codec.pipeline import encode_image, decode_image, encode_to_bytes, decode_bytes

__all__ = [
    "ResidualSymbol", "residual", "reconstruct", "fold_residual", "unfold_residual",
    "ContextModel", "FrequencyTable", "context_of", "NUM_CONTEXTS",
    "RangeEncoder", "RangeDecoder", "range_encode", "range_decode",
    "serialize_container", "parse_container", "read_container", "write_container",
    "sample_checksum",
    "encode_image", "decode_image", "encode_to_bytes", "decode_bytes",
]
