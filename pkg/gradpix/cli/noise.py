"""
noise: write Gaussian-noised copies of a PNG directory
"""

import argparse
import math
from pathlib import Path

from gradpix.cli.common import add_seed, emit
from gradpix.image.noise import noise_directory


def variance_value(value: str) -> float:
    number = float(value)
    if not (math.isfinite(number) and number >= 0.0):
        raise argparse.ArgumentTypeError(f"variance must be a finite number >= 0, got {value}")
    return number


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "noise",
        help="add seeded Gaussian noise to every PNG of a directory",
        description="Variance is on the normalized [0, 1] intensity scale.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--in", dest="input_dir", type=Path, required=True, help="directory of PNGs")
    parser.add_argument("--out", dest="output_dir", type=Path, required=True, help="directory for noisy PNGs")
    parser.add_argument("--variance", type=variance_value, required=True, help="noise variance")
    add_seed(parser)
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    written = noise_directory(args.input_dir, args.output_dir, args.variance, args.seed)
    emit(images=len(written), variance=args.variance, seed=args.seed, out=args.output_dir)
    return 0
