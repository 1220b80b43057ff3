"""
encode: PNG -> .gpx container
"""

import argparse
from pathlib import Path

from gradpix.cli.common import add_ged_threshold, emit
from gradpix.codec.container import write_container
from gradpix.codec.pipeline import encode_image
from gradpix.core.config import PREDICTOR_TAGS
from gradpix.image.png_io import load_png
from gradpix.schemas.predictor import PredictorKind


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "encode",
        help="compress a PNG into a container",
        description="Compress a PNG. Original size is the PNG file size.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("input", type=Path, help="source PNG")
    parser.add_argument("output", type=Path, help="container to write (.gpx)")
    parser.add_argument("--predictor", choices=PREDICTOR_TAGS, default="gap", help="predictor tag")
    add_ged_threshold(parser)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    img = load_png(args.input)
    kind = PredictorKind.from_tag(args.predictor, args.ged_threshold)
    compressed = write_container(encode_image(img, kind), args.output)
    original = args.input.stat().st_size
    ratio = original / compressed
    emit(
        message=f"{args.input} -> {args.output}: {original} -> {compressed} bytes (ratio {ratio:.3f})",
        predictor=kind.label,
        original_size_bytes=original,
        raw_size_bytes=img.raw_size,
        compressed_size_bytes=compressed,
        compression_ratio=ratio,
    )
    return 0
