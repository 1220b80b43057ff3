"""
generate: write seeded synthetic PNGs
"""

import argparse
from pathlib import Path

from gradpix.cli.common import add_seed, emit, positive_int
from gradpix.image.synthetic import generate_directory
from gradpix.schemas.image import SyntheticKind


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "generate",
        help="write synthetic test images",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--out", dest="output_dir", type=Path, required=True, help="directory for PNGs")
    parser.add_argument("--kind", choices=[k.value for k in SyntheticKind], required=True, help="image kind")
    parser.add_argument("--count", type=positive_int, default=1, help="number of images")
    parser.add_argument("--width", type=positive_int, default=256, help="width in pixels")
    parser.add_argument("--height", type=positive_int, default=256, help="height in pixels")
    parser.add_argument("--channels", type=int, choices=(1, 3), default=1, help="1 (gray) or 3 (RGB)")
    parser.add_argument("--bit-depth", type=int, choices=(8, 16), default=8, help="bits per sample")
    add_seed(parser)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    written = generate_directory(
        args.output_dir,
        args.kind,
        args.count,
        args.width,
        args.height,
        args.seed,
        channels=args.channels,
        bit_depth=args.bit_depth,
    )
    emit(images=len(written), kind=args.kind, out=args.output_dir)
    return 0
