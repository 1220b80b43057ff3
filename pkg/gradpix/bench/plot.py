"""
Boxplots
========
Draws one box per predictor for a metric column of a benchmark CSV and
saves it as standalone SVG.

Whiskers follow Tukey's rule: they reach the most extreme data point
within 1.5 x IQR of the quartiles; everything beyond is an outlier dot.
"""

from pathlib import Path
from typing import List, Sequence, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
import pandas as pd  # noqa: E402
from matplotlib import cbook  # noqa: E402
from pydantic import BaseModel  # noqa: E402

from gradpix.bench.report import read_csv  # noqa: E402
from gradpix.core.exceptions import (  # noqa: E402
    EmptyGroupError,
    MalformedCsvError,
    PlotError,
    UnknownMetricError,
)

METRICS = ("compression_ratio", "time_seconds", "percent_of_original", "compressed_size_bytes")
WHISKER_IQR = 1.5


class BoxStats(BaseModel):
    label: str = ""
    median: float
    q1: float
    q3: float
    whislo: float
    whishi: float
    fliers: List[float]


def box_stats(values: Sequence[float], label: str = "") -> BoxStats:
    data = np.asarray(values, dtype=float)
    if data.size == 0:
        raise EmptyGroupError(f"group '{label}' has no values")
    stats = cbook.boxplot_stats(data, whis=WHISKER_IQR)[0]
    return BoxStats(
        label=label,
        median=float(stats["med"]),
        q1=float(stats["q1"]),
        q3=float(stats["q3"]),
        whislo=float(stats["whislo"]),
        whishi=float(stats["whishi"]),
        fliers=[float(v) for v in stats["fliers"]],
    )


def group_stats(frame: pd.DataFrame, metric: str) -> List[BoxStats]:
    """Box statistics per predictor, in lexicographic predictor order."""
    if metric not in METRICS:
        raise UnknownMetricError(metric, METRICS)
    if frame.empty:
        raise EmptyGroupError("CSV has no rows to plot")
    values = pd.to_numeric(frame[metric], errors="coerce")
    if values.isna().any():
        raise MalformedCsvError(f"column '{metric}' holds non-numeric values")
    return [
        box_stats(values[frame["predictor"] == predictor].to_numpy(), predictor)
        for predictor in sorted(frame["predictor"].unique())
    ]


def plot_boxplot(
    csv_path: Union[str, Path],
    out_svg_path: Union[str, Path],
    metric: str = "compression_ratio",
) -> List[BoxStats]:
    """Render the boxplot SVG; returns the statistics that were drawn."""
    if metric not in METRICS:
        raise UnknownMetricError(metric, METRICS)
    groups = group_stats(read_csv(csv_path), metric)

    with plt.rc_context({"svg.hashsalt": "gradpix", "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=(max(4, 1.5 * len(groups)), 5))
        ax.bxp([_bxp_dict(g) for g in groups], showfliers=True)
        ax.set_xlabel("predictor")
        ax.set_ylabel(metric)
        ax.set_title(f"{metric} by predictor")
        ax.grid(axis="y", linestyle="--", alpha=0.7)
        fig.tight_layout()
        try:
            Path(out_svg_path).parent.mkdir(parents=True, exist_ok=True)
            fig.savefig(out_svg_path, format="svg", metadata={"Date": None})
        except OSError as exc:
            raise PlotError(f"cannot write SVG {out_svg_path}: {exc}") from exc
        finally:
            plt.close(fig)
    return groups


def _bxp_dict(stats: BoxStats) -> dict:
    return {
        "label": stats.label,
        "med": stats.median,
        "q1": stats.q1,
        "q3": stats.q3,
        "whislo": stats.whislo,
        "whishi": stats.whishi,
        "fliers": stats.fliers,
    }
