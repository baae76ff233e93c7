import json
import logging
from pathlib import Path
from typing import Any, Optional

from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from service_locator import service_locator

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    """Laboratory settings, overridable through ``RANDERS_LAB_*`` variables."""

    model_config = SettingsConfigDict(env_prefix="RANDERS_LAB_", extra="ignore")

    # Logging
    log_level: str = "WARNING"

    # Parallel fan-out over samples and grid points
    threads: int = Field(1, ge=1)

    # Largest one-pass F^2 jet (monomial count) before the x-capped pass is used
    jet_budget: int = Field(500, ge=1)

    # Classification and verification tolerances
    holds_tolerance: float = Field(1e-6, gt=0)
    fails_tolerance: float = Field(1e-3, gt=0)
    divisibility_tolerance: float = Field(1e-8, gt=0)

    # Sampling defaults
    default_samples: int = Field(50, ge=1)
    default_seed: int = Field(0, ge=0)
    sample_radius: float = Field(0.3, gt=0)

    # Volume oracle resolution
    quadrature_nodes: int = Field(2048, ge=16)
    monte_carlo_samples: int = Field(1_000_000, ge=1000)

    @classmethod
    def load(cls: type["Settings"], path: Optional[Path] = None) -> "Settings":
        """Load settings from an optional JSON file on top of the environment."""
        if path is None:
            return cls()
        try:
            with Path(path).open() as f:
                data: dict[str, Any] = json.load(f)
            settings = cls(**data)
            logger.info(f"Loaded settings from {path}: {sorted(data)}")
            return settings
        except (OSError, json.JSONDecodeError, ValidationError, TypeError) as e:
            logger.error(f"Error loading settings file {path}: {e}")
            return cls()


def get_settings() -> Settings:
    """Get the cached settings instance."""
    return service_locator.get_typed("settings", Settings, Settings.load)


def reload_settings(path: Optional[Path] = None) -> Settings:
    """Replace the cached settings, e.g. after the CLI parsed ``--config``."""
    settings = Settings.load(path)
    service_locator.register("settings", settings)
    return settings
