"""
Configuration module for the Hypertrans application.
Handles environment variables and application settings.
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

_BACKENDS = ("berge", "mtminer", "mmcs")


class Settings:
    """Application settings loaded from environment variables."""

    # Logging Configuration
    DEBUG_MODE: bool = os.getenv("DEBUG_MODE", "false").lower() == "true"
    VERBOSE_MODE: bool = os.getenv("VERBOSE_MODE", "false").lower() == "true"
    LOG_FILE: str = os.getenv("LOG_FILE", "")
    ENVIRONMENT: str = os.getenv("ENVIRONMENT", "development")

    # Enumeration Configuration
    DEFAULT_BACKEND: str = os.getenv("DEFAULT_BACKEND", "mmcs")
    HT_SEED: str = os.getenv("HT_SEED", "20130101")
    BENCH_WARMUP: bool = os.getenv("BENCH_WARMUP", "true").lower() == "true"

    # Database Configuration (benchmark rows)
    DATABASE_URL: str = os.getenv("DATABASE_URL", "sqlite:///./bench_runs.db")
    DATABASE_ECHO: bool = os.getenv("DATABASE_ECHO", "false").lower() == "true"

    # FastAPI Configuration
    APP_TITLE: str = "Hypertrans API"
    APP_DESCRIPTION: str = "Minimal transversal enumeration, irredundant representation and functional dependency inference"
    APP_VERSION: str = "1.0.0"

    # Server Configuration
    HOST: str = os.getenv("HOST", "0.0.0.0")
    PORT: int = int(os.getenv("PORT", "8000"))

    @property
    def default_backend(self) -> str:
        """Backend used by the higher-level pipelines; falls back to mmcs on unknown names."""
        name = self.DEFAULT_BACKEND.strip().lower()
        return name if name in _BACKENDS else "mmcs"

    @property
    def is_default_backend_valid(self) -> bool:
        """Check whether DEFAULT_BACKEND names a known backend."""
        return self.DEFAULT_BACKEND.strip().lower() in _BACKENDS

    @property
    def seed(self) -> int:
        """Generator seed from HT_SEED, masked to 64 bits."""
        try:
            return int(os.getenv("HT_SEED", self.HT_SEED)) & 0xFFFFFFFFFFFFFFFF
        except ValueError:
            return 20130101


# Create settings instance
settings = Settings()
