"""Environment-driven configuration using Pydantic Settings."""

from enum import StrEnum

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LogLevel(StrEnum):
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="PLANELIN_", env_file=".env", env_file_encoding="utf-8"
    )

    # CLI
    default_field: str = Field(
        default="q", description="Field used when --field is absent (q or fp:<p>)"
    )
    log_level: LogLevel = LogLevel.WARNING

    # Search bounds
    image_cap: int = Field(
        default=20000, description="Largest finite image enumerated for S mod m"
    )
    section_depth: int = Field(
        default=4, description="Word depth of breadth-first orbit sections"
    )
    hypothesis_word_bound: int = Field(
        default=6, description="Word length bound for hypothesis and subamalgam checks"
    )
    distinctness_length: int = Field(
        default=6, description="Word length bound of the distinctness suite"
    )

    # Property harness
    property_seed: int = Field(
        default=20240521, description="Seed of the random acceptance harness"
    )


settings = Settings()
