from pathlib import Path
from typing import Literal

from pydantic import field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="NETMEND_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="ignore",
    )

    # Project metadata
    PROJECT_NAME: str = "netmend"
    VERSION: str = "0.1.0"

    # Output
    OUT: Path | None = None

    # Restoration
    THRESHOLD_MODE: Literal["n", "n-1"] = "n"
    TIEBREAK: Literal["random", "deterministic"] = "random"
    BUDGET_INCREMENTS: int = 10
    COST_SCALE: int = 100

    # Trust
    TX_LOW: int = 1
    TX_HIGH: int = 10
    DEFAULT_TRUST: float = 0.5

    # Metrics
    SPECTRAL_MAX_NODES: int = 2000

    # Logging
    LOG_LEVEL: str = "INFO"

    @field_validator("DEFAULT_TRUST")
    @classmethod
    def check_default_trust(cls, v: float) -> float:
        if not 0.0 <= v <= 1.0:
            raise ValueError("DEFAULT_TRUST must lie in [0, 1]")
        return v

    @field_validator("BUDGET_INCREMENTS", "COST_SCALE", "SPECTRAL_MAX_NODES")
    @classmethod
    def check_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("must be a positive integer")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def normalize_log_level(cls, v: str) -> str:
        return v.upper()


settings = Settings()
