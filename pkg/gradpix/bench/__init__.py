from gradpix.bench.runner import run_bench, run_task, verify_container, BenchTask
from gradpix.bench.report import write_csv, read_csv, records_frame
from gradpix.bench.summary import summarize, compare_to_baseline, win_counts
from gradpix.bench.plot import plot_boxplot, box_stats, group_stats, BoxStats, METRICS
from gradpix.bench.experiments import noise_sweep, is_monotonic_in_noise, edge_corpus_experiment

# Export the bench operations
__all__ = [
    "run_bench",
    "run_task",
    "verify_container",
    "BenchTask",
    "write_csv",
    "read_csv",
    "records_frame",
    "summarize",
    "compare_to_baseline",
    "win_counts",
    "plot_boxplot",
    "box_stats",
    "group_stats",
    "BoxStats",
    "METRICS",
    "noise_sweep",
    "is_monotonic_in_noise",
    "edge_corpus_experiment",
]
