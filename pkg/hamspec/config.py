# hamspec/config.py

"""
Central configuration for hamspec.

- Reads environment variables (optionally from a .env file)
- Provides a single Settings object for the rest of the codebase
"""

from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import BaseModel, field_validator

# Load variables from .env if present
load_dotenv()


class Settings(BaseModel):
    """
    Configuration container for hamspec.

    Values are typically supplied via environment variables:

    - HAMSPEC_TOL / HAMSPEC_TABLE_TOL / HAMSPEC_REFINE_TOL
    - HAMSPEC_TOL_GUARD
    - HAMSPEC_MAX_ITERATIONS
    - HAMSPEC_SEED / HAMSPEC_RANDOM_SAMPLES / HAMSPEC_THEOREM2_SAMPLES
    - HAMSPEC_JOBS / HAMSPEC_CHUNK_SIZE
    - HAMSPEC_ISO_MAX_ORDER / HAMSPEC_HAM_MAX_ORDER / HAMSPEC_CIRCUMFERENCE_MAX_ORDER
    - HAMSPEC_LOG_LEVEL
    - HAMSPEC_ENV
    """

    # spectral accuracy
    tol: float = 1e-10
    table_tol: float = 1e-6
    refine_tol: float = 1e-12
    tol_guard: float = 1e-7
    max_iterations: int = 200_000

    # random spot checks
    seed: int = 20140625
    random_samples: int = 1000
    # qualifying graphs (delta >= 2, above the threshold) per theorem2 spot check
    theorem2_samples: int = 100_000

    # enumeration / workers
    jobs: int = 1
    chunk_size: int = 65_536

    # exact-method caps
    iso_max_order: int = 11
    ham_max_order: int = 24
    circumference_max_order: int = 18

    log_level: str = "WARNING"

    # dev / ci / etc.
    env: str = "development"

    @field_validator("tol", "table_tol", "refine_tol", "tol_guard")
    @classmethod
    def validate_positive_tolerance(cls, v: float) -> float:
        if not v > 0:
            raise ValueError("tolerances must be > 0")
        return v

    @field_validator("jobs", "chunk_size", "max_iterations", "random_samples", "theorem2_samples")
    @classmethod
    def validate_positive_count(cls, v: int) -> int:
        if v < 1:
            raise ValueError("counts must be >= 1")
        return v

    @field_validator("ham_max_order")
    @classmethod
    def validate_ham_cap(cls, v: int) -> int:
        if not 1 <= v <= 24:
            raise ValueError("HAMSPEC_HAM_MAX_ORDER must be within 1..24")
        return v

    @field_validator("log_level")
    @classmethod
    def validate_log_level(cls, v: str) -> str:
        level = v.upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level: {v}")
        return level

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Build a Settings object from environment variables.
        """
        return cls(
            tol=float(os.getenv("HAMSPEC_TOL", "1e-10")),
            table_tol=float(os.getenv("HAMSPEC_TABLE_TOL", "1e-6")),
            refine_tol=float(os.getenv("HAMSPEC_REFINE_TOL", "1e-12")),
            tol_guard=float(os.getenv("HAMSPEC_TOL_GUARD", "1e-7")),
            max_iterations=int(os.getenv("HAMSPEC_MAX_ITERATIONS", "200000")),
            seed=int(os.getenv("HAMSPEC_SEED", "20140625")),
            random_samples=int(os.getenv("HAMSPEC_RANDOM_SAMPLES", "1000")),
            theorem2_samples=int(os.getenv("HAMSPEC_THEOREM2_SAMPLES", "100000")),
            jobs=int(os.getenv("HAMSPEC_JOBS") or os.cpu_count() or 1),
            chunk_size=int(os.getenv("HAMSPEC_CHUNK_SIZE", "65536")),
            iso_max_order=int(os.getenv("HAMSPEC_ISO_MAX_ORDER", "11")),
            ham_max_order=int(os.getenv("HAMSPEC_HAM_MAX_ORDER", "24")),
            circumference_max_order=int(
                os.getenv("HAMSPEC_CIRCUMFERENCE_MAX_ORDER", "18")
            ),
            log_level=os.getenv("HAMSPEC_LOG_LEVEL", "WARNING"),
            env=os.getenv("HAMSPEC_ENV", "development"),
        )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Cached access to Settings.

    Usage:
        from hamspec.config import get_settings
        settings = get_settings()
    """
    return Settings.from_env()
