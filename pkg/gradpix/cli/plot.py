"""
plot: boxplot SVG of one CSV metric per predictor
"""

import argparse
from pathlib import Path

from gradpix.bench.plot import METRICS, plot_boxplot
from gradpix.cli.common import emit


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "plot",
        help="draw a per-predictor boxplot from a bench CSV",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("csv", type=Path, help="bench CSV")
    parser.add_argument("output", type=Path, help="SVG to write")
    # Validated by plot_boxplot so an unknown metric is a runtime error naming the choices
    parser.add_argument("--metric", default="compression_ratio", help=f"one of: {', '.join(METRICS)}")
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    groups = plot_boxplot(args.csv, args.output, args.metric)
    emit(metric=args.metric, groups=len(groups), svg=args.output)
    return 0
