"""
sweep: noise sweep over a corpus, or the flat_edges corpus experiment (--edges)
"""

import argparse
from pathlib import Path

from gradpix.bench.experiments import (
    DEFAULT_VARIANCES,
    EDGE_CORPUS_COUNT,
    EDGE_CORPUS_SIZE,
    edge_corpus_experiment,
    is_monotonic_in_noise,
    noise_sweep,
)
from gradpix.cli.common import (
    add_ged_threshold,
    add_predictor_list,
    add_seed,
    add_workers,
    emit,
    positive_int,
    predictor_kinds,
)
from gradpix.cli.noise import variance_value
from gradpix.utils.helpers import format_kv


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "sweep",
        help="run the noise sweep or the flat_edges experiment",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--edges", action="store_true", help="bench a generated flat_edges corpus instead")
    parser.add_argument("--in", dest="input_dir", type=Path, help="directory of PNGs (noise sweep)")
    parser.add_argument("--work", dest="work_dir", type=Path, required=True, help="working directory")
    parser.add_argument(
        "--variance",
        dest="variances",
        type=variance_value,
        nargs="+",
        default=list(DEFAULT_VARIANCES),
        help="noise variances",
    )
    parser.add_argument("--count", type=positive_int, default=EDGE_CORPUS_COUNT, help="images (--edges)")
    parser.add_argument("--size", type=positive_int, default=EDGE_CORPUS_SIZE, help="image side (--edges)")
    add_seed(parser)
    add_predictor_list(parser)
    add_workers(parser)
    add_ged_threshold(parser)
    parser.set_defaults(func=run, parser=parser)


def run(args: argparse.Namespace) -> int:
    if args.edges:
        if args.input_dir is not None:
            args.parser.error("--in cannot be combined with --edges")
        if args.variances is not args.parser.get_default("variances"):
            args.parser.error("--variance cannot be combined with --edges")
    kinds = predictor_kinds(args)
    if args.edges:
        return _run_edges(args, kinds)
    if args.input_dir is None:
        args.parser.error("--in is required unless --edges is given")

    rows = noise_sweep(args.input_dir, args.work_dir, args.variances, args.seed, kinds, args.workers)
    for row in rows:
        print(format_kv(variance=row.variance, **row.mean_compressed_size))
    emit(variances=len(rows), monotonic=is_monotonic_in_noise(rows))
    return 0


def _run_edges(args: argparse.Namespace, kinds) -> int:
    result = edge_corpus_experiment(
        args.work_dir, args.count, args.size, args.seed, kinds, args.workers
    )
    for s in result.summaries:
        print(
            format_kv(
                predictor=s.predictor,
                mean_compressed_size=s.mean_compressed_size,
                wins=result.wins.get(s.predictor, 0),
                win_share=result.win_share(s.predictor),
            )
        )
    emit(images=result.images, best_mean=result.best_mean or "tie")
    return 0
