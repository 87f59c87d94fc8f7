import logging
from typing import Any

from pydantic import ConfigDict, field_validator
from pydantic_settings import BaseSettings, PydanticBaseSettingsSource


class Settings(BaseSettings):
    DEFAULT_METRIC: str = "euclidean"
    DEFAULT_LINKAGE: str = "average"
    DEFAULT_PROPERTIES: tuple[str, ...] = ("electron_affinity", "melting_point", "boiling_point", "density", "valence")
    DEFAULT_QUANTILE: float = 0.25
    DEFAULT_PERIODS: int = 8
    MAX_LINEAR_EXTENSION_GROUND: int = 10
    FLOAT_DIGITS: int = 12
    LOG_LEVEL: str = "WARNING"

    @field_validator("DEFAULT_METRIC")
    @classmethod
    def validate_metric(cls, v: Any):
        if v not in ["euclidean", "manhattan"]:
            raise ValueError("Metric must be euclidean or manhattan")
        return v

    @field_validator("DEFAULT_LINKAGE")
    @classmethod
    def validate_linkage(cls, v: Any):
        if v not in ["single", "complete", "average"]:
            raise ValueError("Linkage must be single, complete or average")
        return v

    @field_validator("DEFAULT_PROPERTIES")
    @classmethod
    def validate_properties(cls, v: Any):
        if not v or len(set(v)) != len(v):
            raise ValueError("Default properties must be a non-empty list of distinct names")
        return tuple(v)

    @field_validator("DEFAULT_QUANTILE")
    @classmethod
    def validate_quantile(cls, v: Any):
        if not 0 < v <= 1:
            raise ValueError("Quantile must lie in (0, 1]")
        return v

    @field_validator("LOG_LEVEL")
    @classmethod
    def validate_log_level(cls, v: Any):
        if v.upper() not in logging.getLevelNamesMapping():
            raise ValueError(f"Unknown log level {v}")
        return v.upper()

    @classmethod
    def settings_customise_sources(cls, settings_cls: type[BaseSettings],
                                   init_settings: PydanticBaseSettingsSource,
                                   env_settings: PydanticBaseSettingsSource,
                                   dotenv_settings: PydanticBaseSettingsSource,
                                   file_secret_settings: PydanticBaseSettingsSource):
        # flags are the only configuration surface: no environment, no dotenv
        return (init_settings,)

    model_config = ConfigDict(extra='ignore', frozen=True)  # noqa


config = Settings()
