"""
Experiments
===========
Canned benchmark runs behind ``gradpix sweep``:

1. noise_sweep: bench a corpus at increasing Gaussian noise variances
2. edge_corpus_experiment: bench a seeded corpus of flat_edges images
"""

import logging
from pathlib import Path
from typing import List, Sequence

from gradpix.bench.runner import run_bench
from gradpix.bench.summary import summarize, win_counts
from gradpix.core.exceptions import BenchError
from gradpix.image.noise import noise_directory
from gradpix.image.synthetic import generate_directory
from gradpix.schemas.bench import BenchConfig, EdgeExperimentResult, NoiseSweepRow
from gradpix.schemas.image import SyntheticKind
from gradpix.schemas.predictor import PredictorKind

logger = logging.getLogger(__name__)

DEFAULT_VARIANCES = (0.0, 0.1, 0.2)
EDGE_CORPUS_COUNT = 30
EDGE_CORPUS_SIZE = 512


# ========================
# 1. NOISE SWEEP
# ========================
def noise_sweep(
    input_dir: Path,
    work_dir: Path,
    variances: Sequence[float] = DEFAULT_VARIANCES,
    seed: int = 0,
    predictors: Sequence[PredictorKind] = (),
    workers: int = 10,
) -> List[NoiseSweepRow]:
    """
    Mean compressed size per predictor at each noise variance.

    For every variance a noisy copy of ``input_dir`` is written under
    ``work_dir/var_<v>/`` and benched there. Rows come back in the order
    of ``variances``.
    """
    if not predictors:
        raise BenchError("noise sweep needs at least one predictor")
    work_dir = Path(work_dir)
    rows = []
    for variance in variances:
        stage = work_dir / f"var_{variance:g}"
        noise_directory(input_dir, stage / "images", variance, seed)
        records = run_bench(
            BenchConfig(
                input_dir=stage / "images",
                output_dir=stage / "containers",
                csv_path=stage / "results.csv",
                predictors=list(predictors),
                workers=workers,
            )
        )
        means = {s.predictor: s.mean_compressed_size for s in summarize(records)}
        logger.info("variance %g: %s", variance, means)
        rows.append(NoiseSweepRow(variance=variance, mean_compressed_size=means))
    return rows


def is_monotonic_in_noise(rows: Sequence[NoiseSweepRow], strict: bool = True) -> bool:
    """True when every predictor's mean size grows with the variance."""
    ordered = sorted(rows, key=lambda r: r.variance)
    for lower, higher in zip(ordered, ordered[1:]):
        for predictor, size in lower.mean_compressed_size.items():
            nxt = higher.mean_compressed_size.get(predictor)
            if nxt is None:
                continue
            if nxt < size or (strict and nxt == size):
                return False
    return True


# ========================
# 2. EDGES AND FLAT AREAS
# ========================
def edge_corpus_experiment(
    work_dir: Path,
    count: int = EDGE_CORPUS_COUNT,
    size: int = EDGE_CORPUS_SIZE,
    seed: int = 0,
    predictors: Sequence[PredictorKind] = (),
    workers: int = 10,
) -> EdgeExperimentResult:
    """Generate ``count`` flat_edges images of ``size`` x ``size`` and bench them."""
    if not predictors:
        raise BenchError("edge experiment needs at least one predictor")
    if count < 1:
        raise BenchError(f"edge experiment needs at least one image, got {count}")
    work_dir = Path(work_dir)
    generate_directory(work_dir / "images", SyntheticKind.FLAT_EDGES, count, size, size, seed)
    records = run_bench(
        BenchConfig(
            input_dir=work_dir / "images",
            output_dir=work_dir / "containers",
            csv_path=work_dir / "results.csv",
            predictors=list(predictors),
            workers=workers,
        )
    )
    summaries = summarize(records)
    ranked = sorted(summaries, key=lambda s: s.mean_compressed_size)
    best = ranked[0].predictor
    if len(ranked) > 1 and ranked[1].mean_compressed_size == ranked[0].mean_compressed_size:
        best = None
    return EdgeExperimentResult(
        images=count,
        summaries=summaries,
        wins=win_counts(records),
        best_mean=best,
    )
