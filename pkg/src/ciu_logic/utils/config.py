from typing import Literal
from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field


class Settings(BaseSettings):
    """애플리케이션 설정 (CLI 설정 겸용)"""

    # Resource Guards
    max_support: int = Field(default=10**6, gt=0, description="Maximum |A_n| that may be built")
    max_evals: int = Field(default=10**7, gt=0, description="Maximum number of enumerated valuations per query")
    max_table_entries: int = Field(default=10**7, gt=0, description="Maximum size^2 of a materialized matrix")
    max_iso_size: int = Field(default=10, gt=0, description="Largest matrix for exhaustive isomorphism search")
    max_expansion: int = Field(default=30, gt=0, description="Largest k accepted by the Fibonacci word expansion")
    max_fib_index: int = Field(default=10**4, gt=0, description="Largest k accepted by the fib command")

    # Output
    output_format: Literal["json", "table"] = Field(default="table", description="Matrix output format")

    # Sampling / Parallelism
    rng_seed: int = Field(default=0, description="Seed for sampled checks")
    jobs: int = Field(default=1, gt=0, description="Parallel enumeration workers")

    # Logging
    log_level: str = Field(default="WARNING", description="Log level")
    log_to_file: bool = Field(default=False, description="Write rotating log files under logs_dir")
    logs_dir: Path = Field(default_factory=lambda: Path.cwd() / "logs")

    model_config = SettingsConfigDict(
        env_prefix="CIU_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        validate_assignment=True,
        extra="ignore",
    )


# 글로벌 설정 인스턴스
settings = Settings()


def get_settings() -> Settings:
    """설정 인스턴스 반환"""
    return settings


def build_settings(**overrides) -> Settings:
    """환경 변수 위에 명시적 값을 덮어쓴 새 설정 생성 (None 값은 무시)"""
    return Settings(**{key: value for key, value in overrides.items() if value is not None})
