"""
Shared CLI Helpers
==================
Argument groups and output helpers reused by several subcommands.

Defaults are read from the environment (GRADPIX_*) when the parser is
built, so ``--help`` shows the effective values and flags win over env.
"""

import argparse
from typing import List, Optional

from gradpix.core.config import PREDICTOR_TAGS, get_settings
from gradpix.schemas.predictor import PredictorKind
from gradpix.utils.helpers import format_kv


def add_ged_threshold(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--ged-threshold",
        type=threshold_value,
        default=get_settings().GED_THRESHOLD,
        help="GED threshold T",
    )


def add_predictor_list(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--predictor",
        dest="predictors",
        nargs="+",
        choices=PREDICTOR_TAGS,
        default=list(get_settings().DEFAULT_PREDICTORS),
        help="predictor tag(s) to run",
    )


def add_workers(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--workers",
        type=positive_int,
        default=get_settings().WORKERS,
        help="worker processes (env GRADPIX_WORKERS)",
    )


def add_seed(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--seed", type=seed_value, default=get_settings().NOISE_SEED, help="RNG seed")


def predictor_kinds(args: argparse.Namespace) -> List[PredictorKind]:
    """Selected predictors, duplicates dropped, in the order given."""
    tags = list(dict.fromkeys(args.predictors))
    return [PredictorKind.from_tag(tag, args.ged_threshold) for tag in tags]


def positive_int(value: str) -> int:
    number = int(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return number


def seed_value(value: str) -> int:
    number = int(value)
    if not 0 <= number < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be a 64-bit unsigned integer, got {value}")
    return number


def threshold_value(value: str) -> int:
    number = int(value)
    if not -32768 <= number <= 32767:
        raise argparse.ArgumentTypeError(f"GED threshold must fit in 16 bits, got {value}")
    return number


def emit(status: str = "ok", message: Optional[str] = None, **pairs) -> None:
    """Print an optional human line, then the final key=value line."""
    if message:
        print(message)
    print(format_kv(status=status, **pairs))
