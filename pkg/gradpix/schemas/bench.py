"""
Bench Schemas
=============
Pydantic models for benchmark configuration, rows and aggregates.
"""

import math
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, Field, model_validator

from gradpix.schemas.container import HEADER_SIZE
from gradpix.schemas.predictor import PredictorKind

# Fixed CSV column order
CSV_COLUMNS = [
    "filename",
    "width",
    "height",
    "original_size_bytes",
    "compressed_size_bytes",
    "time_seconds",
    "percent_of_original",
    "compression_ratio",
    "predictor",
]


class BenchConfig(BaseModel):
    input_dir: Path
    output_dir: Path
    csv_path: Path
    predictors: List[PredictorKind] = Field(..., min_length=1)
    workers: int = Field(10, ge=1, description="Size of the worker pool")
    verify: bool = True


class BenchRecord(BaseModel):
    """One CSV row of per-image compression metrics."""
    filename: str
    width: int = Field(0, ge=0)
    height: int = Field(0, ge=0)
    original_size_bytes: int = Field(0, ge=0, description="PNG file size on disk")
    compressed_size_bytes: int = Field(0, ge=0, description="Container size")
    time_seconds: float = Field(0.0, ge=0.0, description="Wall-clock encode time")
    percent_of_original: float = 0.0
    compression_ratio: float = 0.0
    predictor: str
    # Set when the image could not be processed; such records never reach the CSV
    error: Optional[str] = None

    @model_validator(mode="after")
    def check_arithmetic(self) -> "BenchRecord":
        if self.error is not None:
            return self
        if self.compressed_size_bytes <= 0 or self.original_size_bytes <= 0:
            raise ValueError("sizes must be positive")
        if self.compressed_size_bytes < HEADER_SIZE:
            raise ValueError(f"compressed size below the {HEADER_SIZE}-byte container header")
        product = self.percent_of_original * self.compression_ratio
        if not math.isclose(product, 100.0, rel_tol=1e-9):
            raise ValueError(f"percent_of_original x compression_ratio = {product}, expected 100")
        return self

    @classmethod
    def measured(
        cls,
        *,
        filename: str,
        width: int,
        height: int,
        original_size_bytes: int,
        compressed_size_bytes: int,
        time_seconds: float,
        predictor: str,
    ) -> "BenchRecord":
        """Build a record, deriving ratio and percentage from the two sizes."""
        ratio = original_size_bytes / compressed_size_bytes
        return cls(
            filename=filename,
            width=width,
            height=height,
            original_size_bytes=original_size_bytes,
            compressed_size_bytes=compressed_size_bytes,
            time_seconds=time_seconds,
            percent_of_original=100.0 / ratio,
            compression_ratio=ratio,
            predictor=predictor,
        )

    @property
    def ok(self) -> bool:
        return self.error is None


class PredictorSummary(BaseModel):
    """Per-predictor means over all successful records."""
    predictor: str
    count: int
    mean_compressed_size: float
    mean_ratio: float
    mean_percent_of_original: float
    mean_time: float


class BaselineComparison(BaseModel):
    """Mean size decrease of one predictor against a baseline predictor."""
    predictor: str
    baseline: str
    images: int
    mean_decrease_bytes: float
    best_image: Optional[str] = None
    best_decrease_bytes: int = 0


class NoiseSweepRow(BaseModel):
    """Mean compressed size per predictor at one noise variance."""
    variance: float
    mean_compressed_size: dict[str, float]


class EdgeExperimentResult(BaseModel):
    """Outcome of benching a seeded flat_edges corpus under several predictors."""
    images: int
    summaries: List[PredictorSummary]
    wins: dict[str, int]
    best_mean: Optional[str] = Field(None, description="Predictor with the smallest mean compressed size")

    def win_share(self, predictor: str) -> float:
        return self.wins.get(predictor, 0) / self.images if self.images else 0.0
