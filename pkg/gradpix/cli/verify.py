"""
verify: decode a container and bit-compare it with a reference PNG
"""

import argparse
from pathlib import Path

from gradpix.cli.common import emit
from gradpix.codec.container import read_container
from gradpix.codec.pipeline import decode_image
from gradpix.image.png_io import load_png


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "verify",
        help="check that a container decodes to a reference PNG (MATCH/MISMATCH)",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("container", type=Path, help="container to decode (.gpx)")
    parser.add_argument("reference", type=Path, help="reference PNG")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    reference = load_png(args.reference)
    decoded = decode_image(read_container(args.container))
    if decoded.same_as(reference):
        emit(message="MATCH", result="match")
        return 0
    emit(status="mismatch", message="MISMATCH", result="mismatch")
    return 1
