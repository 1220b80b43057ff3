"""
Application Configuration
==========================
Loads settings from environment variables (GRADPIX_* or a .env file).
"""

from typing import List

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


PREDICTOR_TAGS = ("zero", "west", "north", "average", "med", "ged", "gap")


class Settings(BaseSettings):
    """
    Application settings loaded from the environment / .env file.
    Uses Pydantic for validation and type safety.
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="GRADPIX_",
        case_sensitive=True,
        extra="ignore",
    )

    # === Application Settings ===
    PROJECT_NAME: str = "gradpix"
    VERSION: str = "1.0.0"

    # === Benchmark Settings ===
    # A pool of 10 workers is the reference setup; GRADPIX_WORKERS overrides it
    WORKERS: int = Field(default=10, ge=1)
    DEFAULT_PREDICTORS: List[str] = ["med", "ged", "gap"]

    # === Codec Settings ===
    GED_THRESHOLD: int = Field(default=8, ge=-32768, le=32767)

    # === Noise Settings ===
    NOISE_SEED: int = Field(default=0, ge=0, lt=2**64)

    # === Logging Settings ===
    LOG_LEVEL: str = "WARNING"
    LOG_FORMAT: str = "%(asctime)s %(levelname)s %(name)s: %(message)s"

    @field_validator("DEFAULT_PREDICTORS")
    @classmethod
    def validate_predictors(cls, v: List[str]) -> List[str]:
        unknown = [tag for tag in v if tag not in PREDICTOR_TAGS]
        if unknown:
            raise ValueError(f"Unknown predictor tags: {', '.join(unknown)}")
        if not v:
            raise ValueError("At least one default predictor is required")
        return v


def get_settings() -> Settings:
    """
    Read settings from the current environment.

    Called at use sites rather than cached in a module-level instance, so a
    malformed GRADPIX_* variable surfaces as a ValidationError inside the
    CLI instead of at import time.
    """
    return Settings()
