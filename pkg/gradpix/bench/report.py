"""
CSV Report
==========
Writes and reads the benchmark CSV.

Schema (fixed column order, header always present, UTF-8, LF endings,
floats with 6 decimals):

    filename,width,height,original_size_bytes,compressed_size_bytes,
    time_seconds,percent_of_original,compression_ratio,predictor
"""

from pathlib import Path
from typing import Iterable, Union

import pandas as pd

from gradpix.core.exceptions import BenchError, MalformedCsvError
from gradpix.schemas.bench import CSV_COLUMNS, BenchRecord


def records_frame(records: Iterable[BenchRecord]) -> pd.DataFrame:
    rows = [r.model_dump(include=set(CSV_COLUMNS)) for r in records]
    return pd.DataFrame(rows, columns=CSV_COLUMNS)


def write_csv(records: Iterable[BenchRecord], path: Union[str, Path]) -> None:
    path = Path(path)
    frame = records_frame(records)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        frame.to_csv(
            path,
            index=False,
            float_format="%.6f",
            lineterminator="\n",
            encoding="utf-8",
        )
    except OSError as exc:
        raise BenchError(f"cannot write CSV {path}: {exc}") from exc


def read_csv(path: Union[str, Path]) -> pd.DataFrame:
    """Load a benchmark CSV, checking that every schema column is present."""
    try:
        frame = pd.read_csv(path, encoding="utf-8")
    except (OSError, UnicodeDecodeError, pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise MalformedCsvError(f"cannot parse {path}: {exc}") from exc
    missing = [c for c in CSV_COLUMNS if c not in frame.columns]
    if missing:
        raise MalformedCsvError(f"{path} is missing column(s): {', '.join(missing)}")
    frame["predictor"] = frame["predictor"].astype(str)
    return frame
