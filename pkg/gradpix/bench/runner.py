"""
Benchmark Runner
================
Compresses every (image, predictor) pair of a corpus over a process pool.

Flow:
1. Scan input_dir for PNGs (sorted)
2. Build one task per (image, predictor)
3. Run tasks on a pool of cfg.workers processes (in-process when workers == 1)
4. Optionally decode every container and compare it to its source image
5. Sort records by (filename, predictor) and write the CSV
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import List

from pydantic import BaseModel

from gradpix.bench.report import write_csv
from gradpix.codec.container import serialize_container
from gradpix.codec.pipeline import decode_bytes, encode_image
from gradpix.core.exceptions import (
    ContainerError,
    EmptyCorpusError,
    GradpixError,
    ImageError,
    VerificationError,
)
from gradpix.core.logging import setup_logging
from gradpix.image.png_io import load_png
from gradpix.schemas.bench import BenchConfig, BenchRecord
from gradpix.schemas.image import RasterImage
from gradpix.schemas.predictor import PredictorKind
from gradpix.utils.helpers import container_path, list_pngs

logger = logging.getLogger(__name__)


class BenchTask(BaseModel):
    """One unit of work: a single image under a single predictor."""
    image_path: Path
    kind: PredictorKind
    output_dir: Path
    verify: bool


def run_bench(cfg: BenchConfig) -> List[BenchRecord]:
    """
    Run the benchmark described by ``cfg``.

    Returns every record, error records included, sorted by
    (filename, predictor). Only successful records reach the CSV.

    Raises:
        EmptyCorpusError: no PNG in cfg.input_dir
        VerificationError: a container did not decode to its source (fatal)
        ContainerError: a container could not be written
        BenchError: the CSV could not be written
    """
    images = list_pngs(cfg.input_dir)
    if not images:
        raise EmptyCorpusError(str(cfg.input_dir))
    try:
        cfg.output_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ContainerError(f"cannot create output directory {cfg.output_dir}: {exc}") from exc

    tasks = [
        BenchTask(image_path=path, kind=kind, output_dir=cfg.output_dir, verify=cfg.verify)
        for path in images
        for kind in cfg.predictors
    ]
    logger.info(
        "benchmarking %d image(s) x %d predictor(s) on %d worker(s)",
        len(images), len(cfg.predictors), cfg.workers,
    )

    if cfg.workers == 1:
        records = [run_task(task) for task in tasks]
    else:
        records = _run_pool(tasks, cfg.workers)

    records.sort(key=lambda r: (r.filename, r.predictor))
    write_csv([r for r in records if r.ok], cfg.csv_path)
    failed = sum(1 for r in records if not r.ok)
    if failed:
        logger.warning("%d task(s) failed; see records with an error marker", failed)
    return records


def _run_pool(tasks: List[BenchTask], workers: int) -> List[BenchRecord]:
    records = []
    level = logging.getLevelName(logging.getLogger("gradpix").getEffectiveLevel())
    with ProcessPoolExecutor(
        max_workers=workers, initializer=setup_logging, initargs=(level,)
    ) as pool:
        futures = [pool.submit(run_task, task) for task in tasks]
        try:
            for future in as_completed(futures):
                records.append(future.result())
        except GradpixError:
            for future in futures:
                future.cancel()
            raise
    return records


def run_task(task: BenchTask) -> BenchRecord:
    """Encode one image with one predictor, write the container, optionally verify it."""
    label = task.kind.label
    name = task.image_path.name
    try:
        img = load_png(task.image_path)
    except ImageError as exc:
        logger.warning("skipping %s: %s", name, exc.detail)
        return BenchRecord(filename=name, predictor=label, error=exc.detail)

    logger.debug("encoding %s with %s", name, label)
    start = time.perf_counter()
    data = serialize_container(encode_image(img, task.kind))
    elapsed = time.perf_counter() - start

    out_path = container_path(task.output_dir, task.image_path, label)
    try:
        out_path.write_bytes(data)
    except OSError as exc:
        raise ContainerError(f"cannot write container {out_path}: {exc}") from exc
    if task.verify:
        verify_container(out_path.read_bytes(), img, f"{name} [{label}]")

    return BenchRecord.measured(
        filename=name,
        width=img.width,
        height=img.height,
        original_size_bytes=task.image_path.stat().st_size,
        compressed_size_bytes=len(data),
        time_seconds=elapsed,
        predictor=label,
    )


def verify_container(data: bytes, source: RasterImage, what: str) -> None:
    """Decode ``data`` and require bitwise equality with ``source``."""
    try:
        decoded = decode_bytes(data)
    except GradpixError as exc:
        raise VerificationError(f"verification failed for {what}: {exc.detail}") from exc
    if not decoded.same_as(source):
        raise VerificationError(f"verification failed for {what}: decoded image differs from source")
