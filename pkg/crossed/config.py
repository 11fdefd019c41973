"""
Verification settings using Pydantic Settings
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Settings loaded from CROSSED_* environment variables
    """

    model_config = SettingsConfigDict(
        env_prefix="CROSSED_", env_file=".env", env_file_encoding="utf-8", case_sensitive=False
    )

    max_c2: int = Field(
        default=4096,
        gt=0,
        description="Largest constructed monoid whose table is materialised; also the largest C2 whose associativity is checked exhaustively",
    )
    max_exhaustive_tuples: int = Field(
        default=1 << 25,
        gt=0,
        description="Largest number of tuples an associativity (other than C2) or structural map check visits exhaustively",
    )
    seed: int = Field(default=0, ge=0, description="Seed for every sampled check")
    sample_triples: int = Field(
        default=1_000_000, gt=0, description="Tuples sampled when a check is above its exhaustive threshold"
    )
    chunk_size: int = Field(
        default=1 << 20, gt=0, le=1 << 24, description="Index tuples evaluated per vectorised block"
    )
    max_enumeration_order: int = Field(default=4, gt=0, le=8)
    node_budget: Optional[int] = Field(default=None, gt=0)
    log_level: str = Field(default="WARNING")


@lru_cache
def get_settings() -> Settings:
    """
    Get cached settings instance
    Using lru_cache to avoid reading .env file on every call
    """
    return Settings()
