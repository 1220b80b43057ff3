"""
decode: .gpx container -> PNG
"""

import argparse
from pathlib import Path

from gradpix.cli.common import emit
from gradpix.codec.container import read_container
from gradpix.codec.pipeline import decode_image
from gradpix.image.png_io import save_png


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "decode",
        help="decompress a container into a PNG",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("input", type=Path, help="container to read (.gpx)")
    parser.add_argument("output", type=Path, help="PNG to write")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    container = read_container(args.input)
    img = decode_image(container)
    save_png(img, args.output)
    emit(
        width=img.width,
        height=img.height,
        channels=img.channels,
        bit_depth=img.bit_depth,
        predictor=container.header.predictor_id.tag,
    )
    return 0
