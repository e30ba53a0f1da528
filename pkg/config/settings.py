import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

DEFAULT_ENUMERATION_MAX_SIZE = 8
DEFAULT_RELATION_MAX_SIZE = 64
DEFAULT_TOWER_MAX_DEPTH = 6
DEFAULT_TOWER_MAX_TOP_SIZE = 128
DEFAULT_GROUPOID_MAX_WORDS = 4096
DEFAULT_PROJECTION_MAX_COUNT = 100000


@dataclass
class ApplicationSettings:
    environment: str
    log_level: str
    log_to_file: bool
    logs_directory: Optional[str]


@dataclass
class BoundSettings:
    enumeration_max_size: int
    relation_max_size: int
    tower_max_depth: int
    tower_max_top_size: int
    groupoid_max_words: int
    projection_max_count: int


@dataclass
class SentrySettings:
    dsn: Optional[str]


@dataclass
class Settings:
    application: ApplicationSettings
    bounds: BoundSettings
    sentry: SentrySettings


def _load_boolean(name: str, default: bool) -> bool:
    value = os.getenv(name)
    if value is None:
        return default

    value_lower = value.strip().lower()
    return value_lower in ["1", "true", "yes", "y"]


def _load_integer(name: str, default: int) -> int:
    value = os.getenv(name)
    if value is None or value.strip() == "":
        return default

    try:
        return int(value)
    except ValueError:
        return default


def _load_positive_integer(name: str, default: int) -> int:
    value = _load_integer(name, default)
    return value if value > 0 else default


def load_settings() -> Settings:
    load_dotenv()

    application_settings = ApplicationSettings(
        environment=os.getenv("APP_ENV", "development"),
        log_level=os.getenv("APP_LOG_LEVEL", "INFO"),
        log_to_file=_load_boolean("GROUPOIDAL_LOG_TO_FILE", True),
        logs_directory=os.getenv("GROUPOIDAL_LOG_DIR") or None,
    )

    bound_settings = BoundSettings(
        enumeration_max_size=_load_positive_integer(
            "GROUPOIDAL_MAX_SIZE", DEFAULT_ENUMERATION_MAX_SIZE
        ),
        relation_max_size=_load_positive_integer(
            "GROUPOIDAL_RELATION_MAX_SIZE", DEFAULT_RELATION_MAX_SIZE
        ),
        tower_max_depth=_load_positive_integer(
            "GROUPOIDAL_MAX_DEPTH", DEFAULT_TOWER_MAX_DEPTH
        ),
        tower_max_top_size=_load_positive_integer(
            "GROUPOIDAL_MAX_TOP_SIZE", DEFAULT_TOWER_MAX_TOP_SIZE
        ),
        groupoid_max_words=_load_positive_integer(
            "GROUPOIDAL_MAX_WORDS", DEFAULT_GROUPOID_MAX_WORDS
        ),
        projection_max_count=_load_positive_integer(
            "GROUPOIDAL_MAX_PROJECTIONS", DEFAULT_PROJECTION_MAX_COUNT
        ),
    )

    sentry_settings = SentrySettings(
        dsn=os.getenv("SENTRY_DSN"),
    )

    return Settings(
        application=application_settings,
        bounds=bound_settings,
        sentry=sentry_settings,
    )
