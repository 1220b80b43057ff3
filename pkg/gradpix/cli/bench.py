"""
bench: compress a PNG directory under several predictors and write the CSV
"""

import argparse
from pathlib import Path

from gradpix.bench.runner import run_bench
from gradpix.bench.summary import summarize
from gradpix.cli.common import add_ged_threshold, add_predictor_list, add_workers, emit, predictor_kinds
from gradpix.schemas.bench import BenchConfig
from gradpix.utils.helpers import format_kv


def add_parser(subparsers) -> None:
    parser = subparsers.add_parser(
        "bench",
        help="benchmark predictors over a directory of PNGs",
        description=(
            "Compress every PNG in --in with every predictor on a process pool. "
            "original_size_bytes in the CSV is the PNG file size, so ratios compare "
            "against the PNG sources rather than raw samples."
        ),
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    parser.add_argument("--in", dest="input_dir", type=Path, required=True, help="directory of PNGs")
    parser.add_argument("--out", dest="output_dir", type=Path, required=True, help="directory for containers")
    parser.add_argument("--csv", dest="csv_path", type=Path, required=True, help="CSV report to write")
    add_predictor_list(parser)
    add_workers(parser)
    add_ged_threshold(parser)
    parser.add_argument(
        "--no-verify", dest="verify", action="store_false", help="skip decoding every container"
    )
    parser.set_defaults(func=run)


def run(args: argparse.Namespace) -> int:
    cfg = BenchConfig(
        input_dir=args.input_dir,
        output_dir=args.output_dir,
        csv_path=args.csv_path,
        predictors=predictor_kinds(args),
        workers=args.workers,
        verify=args.verify,
    )
    records = run_bench(cfg)
    failed = sum(1 for r in records if not r.ok)

    # Averages per predictor once every task is done
    for s in summarize(records):
        print(
            format_kv(
                predictor=s.predictor,
                images=s.count,
                mean_compressed_size=s.mean_compressed_size,
                mean_ratio=s.mean_ratio,
                mean_percent_of_original=s.mean_percent_of_original,
                mean_time=s.mean_time,
            )
        )
    emit(rows=len(records) - failed, failed=failed, workers=cfg.workers, csv=cfg.csv_path)
    return 0
