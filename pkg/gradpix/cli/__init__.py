"""
CLI Parser
==========
Combines all subcommand parsers
"""

import argparse

from gradpix.cli import (
    encode,
    decode,
    verify,
    bench,
    plot,
    noise,
    generate,
    sweep,
)
from gradpix.core.config import get_settings

COMMANDS = (encode, decode, verify, bench, plot, noise, generate, sweep)


def build_parser() -> argparse.ArgumentParser:
    """Main parser with one subparser per command module."""
    settings = get_settings()
    parser = argparse.ArgumentParser(
        prog="gradpix",
        description="Lossless gradient-predictive image codec and benchmark harness",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {settings.VERSION}")
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO logs, -vv for DEBUG"
    )

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    # Include all commands
    for command in COMMANDS:
        command.add_parser(subparsers)
    return parser


__all__ = ["build_parser", "COMMANDS"]
