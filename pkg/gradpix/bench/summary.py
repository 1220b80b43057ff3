"""
Summary Statistics
==================
Aggregates over benchmark records: per-predictor means, size decrease
against a baseline predictor, and per-image wins.
"""

from typing import Dict, List, Sequence

import pandas as pd

from gradpix.bench.report import records_frame
from gradpix.core.exceptions import BenchError
from gradpix.schemas.bench import BaselineComparison, BenchRecord, PredictorSummary


def _frame(records: Sequence[BenchRecord]) -> pd.DataFrame:
    ok = [r for r in records if r.ok]
    if not ok:
        raise BenchError("no successful records to summarize")
    return records_frame(ok)


def summarize(records: Sequence[BenchRecord]) -> List[PredictorSummary]:
    """Arithmetic means per predictor, ordered by predictor tag."""
    grouped = (
        _frame(records)
        .groupby("predictor", sort=True)
        .agg(
            count=("filename", "size"),
            mean_compressed_size=("compressed_size_bytes", "mean"),
            mean_ratio=("compression_ratio", "mean"),
            mean_percent_of_original=("percent_of_original", "mean"),
            mean_time=("time_seconds", "mean"),
        )
    )
    return [
        PredictorSummary(
            predictor=str(predictor),
            count=int(row["count"]),
            mean_compressed_size=float(row["mean_compressed_size"]),
            mean_ratio=float(row["mean_ratio"]),
            mean_percent_of_original=float(row["mean_percent_of_original"]),
            mean_time=float(row["mean_time"]),
        )
        for predictor, row in grouped.iterrows()
    ]


def _size_table(records: Sequence[BenchRecord]) -> pd.DataFrame:
    """filename x predictor table of compressed sizes."""
    return _frame(records).pivot_table(
        index="filename", columns="predictor", values="compressed_size_bytes", aggfunc="first"
    )


def compare_to_baseline(records: Sequence[BenchRecord], baseline: str) -> List[BaselineComparison]:
    """
    Mean decrease in compressed size of every predictor against ``baseline``.

    Positive values mean smaller containers than the baseline. Only images
    coded under both predictors count. The image with the largest single
    decrease is reported alongside.
    """
    table = _size_table(records)
    if baseline not in table.columns:
        raise BenchError(f"baseline predictor '{baseline}' has no records")

    comparisons = []
    for predictor in sorted(table.columns):
        if predictor == baseline:
            continue
        pair = table[[baseline, predictor]].dropna()
        if pair.empty:
            continue
        decrease = pair[baseline] - pair[predictor]
        best = decrease.idxmax()
        comparisons.append(
            BaselineComparison(
                predictor=predictor,
                baseline=baseline,
                images=len(pair),
                mean_decrease_bytes=float(decrease.mean()),
                best_image=str(best),
                best_decrease_bytes=int(decrease[best]),
            )
        )
    return comparisons


def win_counts(records: Sequence[BenchRecord]) -> Dict[str, int]:
    """Images on which each predictor gave the strictly smallest container."""
    table = _size_table(records)
    wins = {predictor: 0 for predictor in sorted(table.columns)}
    for _, sizes in table.iterrows():
        sizes = sizes.dropna()
        smallest = sizes[sizes == sizes.min()]
        if len(smallest) == 1:
            wins[smallest.index[0]] += 1
    return wins
