"""
Runtime settings for cremona-locus.

Values come from the environment (a .env file is loaded if present) and
can be overridden by CLI flags.
"""

import logging
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

# Load environment variables
load_dotenv()

DEFAULT_PRIME = 2147483647
DEFAULT_SEED = 42


class Settings(BaseModel):
    """Oracle and logging settings."""

    prime: int = Field(DEFAULT_PRIME, description="Prime of the oracle field")
    seed: int = Field(DEFAULT_SEED, ge=0, description="Seed of the point configuration")
    log_level: str = Field("WARNING", description="Root logging level")
    log_workflow_state: bool = Field(False, description="Print verification state updates")
    fixture_workers: int = Field(4, ge=1, description="Threads for --fixtures batches")


def _env_int(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}")


def _env_flag(name: str, default: bool = False) -> bool:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default
    return value.strip().lower() == "true"


def _env_level(name: str, default: str) -> str:
    value = (os.getenv(name) or default).strip().upper()
    if not isinstance(logging.getLevelName(value), int):
        raise ValueError(f"{name} must be a logging level name, got {value!r}")
    return value


def get_settings(prime: Optional[int] = None, seed: Optional[int] = None) -> Settings:
    """
    Read settings from the environment.

    Args:
        prime: Overrides CREMONA_LOCUS_PRIME when given.
        seed: Overrides CREMONA_LOCUS_SEED when given.

    Raises:
        ValueError: If an environment variable is malformed.
    """
    return Settings(
        prime=prime if prime is not None else _env_int("CREMONA_LOCUS_PRIME", DEFAULT_PRIME),
        seed=seed if seed is not None else _env_int("CREMONA_LOCUS_SEED", DEFAULT_SEED),
        log_level=_env_level("CREMONA_LOCUS_LOG_LEVEL", "WARNING"),
        log_workflow_state=_env_flag("LOG_WORKFLOW_STATE"),
        fixture_workers=_env_int("CREMONA_LOCUS_FIXTURE_WORKERS", 4),
    )
