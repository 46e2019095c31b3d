"""Utility functions for configuration management."""

import os
from pathlib import Path

from dotenv import load_dotenv

from ..constants import (
    DEFAULT_ALPHA,
    DEFAULT_ARCHIVE_DIRECTORY,
    DEFAULT_LOG_LEVEL,
    DEFAULT_WORKERS,
    ENV_ALPHA,
    ENV_ARCHIVE_DIRECTORY,
    ENV_LOG_LEVEL,
    ENV_WORKERS,
)

# Load environment variables
load_dotenv()


class Config:
    """Application configuration."""

    # Paths
    BASE_DIR: Path = Path(__file__).parent.parent.parent.parent
    ARCHIVE_DIRECTORY: Path = BASE_DIR / os.getenv(
        ENV_ARCHIVE_DIRECTORY, DEFAULT_ARCHIVE_DIRECTORY
    )

    # Execution
    WORKERS: int = int(os.getenv(ENV_WORKERS, DEFAULT_WORKERS))
    LOG_LEVEL: str = os.getenv(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL).upper()

    # Statistics
    ALPHA: float = float(os.getenv(ENV_ALPHA, str(DEFAULT_ALPHA)))

    @classmethod
    def ensure_directories(cls):
        """Ensure all required directories exist."""
        cls.ARCHIVE_DIRECTORY.mkdir(parents=True, exist_ok=True)
