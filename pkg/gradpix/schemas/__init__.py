from gradpix.schemas.image import (
    RasterImage,
    NoiseSpec,
    SyntheticKind,
)
from gradpix.schemas.predictor import (
    PredictorId,
    PredictorKind,
    CausalNeighborhood,
    GradientPair,
    DEFAULT_GED_THRESHOLD,
)
from gradpix.schemas.container import (
    ContainerHeader,
    CompressedContainer,
    MAGIC,
    FORMAT_VERSION,
    HEADER_SIZE,
)
from gradpix.schemas.bench import (
    BenchConfig,
    BenchRecord,
    PredictorSummary,
    BaselineComparison,
    NoiseSweepRow,
    EdgeExperimentResult,
    CSV_COLUMNS,
)

__all__ = [
    # Image
    "RasterImage", "NoiseSpec", "SyntheticKind",

    # Predictor
    "PredictorId", "PredictorKind", "CausalNeighborhood",
    "GradientPair", "DEFAULT_GED_THRESHOLD",

    # Container
    "ContainerHeader", "CompressedContainer",
    "MAGIC", "FORMAT_VERSION", "HEADER_SIZE",

    # Bench
    "BenchConfig", "BenchRecord", "PredictorSummary",
    "BaselineComparison", "NoiseSweepRow", "EdgeExperimentResult", "CSV_COLUMNS",
]
