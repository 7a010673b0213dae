"""Application settings and configuration."""

import logging
import logging.config
import os
from typing import Optional


class Settings:
    """Toolkit settings and configuration management."""

    # Application settings
    APP_NAME: str = "relpres"
    APP_VERSION: str = "1.0.0"

    # Logging settings
    LOG_LEVEL: str = os.getenv("RELPRES_LOG_LEVEL", "WARNING").upper()
    LOG_CONFIG: Optional[str] = os.getenv("RELPRES_LOG_CONFIG")

    # Randomized trials
    DEFAULT_SEED: int = int(os.getenv("RELPRES_SEED", "7"))
    FUZZ_MAX_T_LETTERS: int = int(os.getenv("RELPRES_FUZZ_MAX_T_LETTERS", "8"))
    FUZZ_MAX_SYLLABLES: int = int(os.getenv("RELPRES_FUZZ_MAX_SYLLABLES", "12"))
    FUZZ_MAX_FACE_DEGREE: int = int(os.getenv("RELPRES_FUZZ_MAX_FACE_DEGREE", "8"))

    # Rewriting settings
    DEFAULT_POWER: int = int(os.getenv("RELPRES_POWER", "2"))
    CONDITION3_MAX_BLOCKS: int = int(os.getenv("RELPRES_CONDITION3_MAX_BLOCKS", "3"))
    CONDITION3_MAX_EXPONENT: int = int(os.getenv("RELPRES_CONDITION3_MAX_EXPONENT", "3"))
    CONDITION3_SAMPLE_SIZE: int = int(os.getenv("RELPRES_CONDITION3_SAMPLE_SIZE", "4"))

    # Audit settings
    REQUIRE_SPHERE: bool = os.getenv("RELPRES_REQUIRE_SPHERE", "true").lower() == "true"

    # Repository root (holds logging.ini)
    ROOT_DIR: str = os.path.dirname(os.path.dirname(os.path.dirname(__file__)))

    @classmethod
    def get_log_config_path(cls) -> str:
        """
        Get the logging configuration file, with fallback to the bundled one.

        Returns:
            Path of the ini file handed to ``logging.config.fileConfig``
        """
        if cls.LOG_CONFIG:
            return cls.LOG_CONFIG
        return os.path.join(cls.ROOT_DIR, "logging.ini")


def configure_logging() -> None:
    """
    Configure logging for a CLI run.

    Loads the ini file from ``Settings.get_log_config_path()`` when it exists and
    falls back to ``basicConfig`` on stderr otherwise. ``RELPRES_LOG_LEVEL`` always
    wins for the ``relpres`` logger.
    """
    config_path = Settings.get_log_config_path()
    if os.path.exists(config_path):
        logging.config.fileConfig(config_path, disable_existing_loggers=False)
    else:
        logging.basicConfig(
            level=Settings.LOG_LEVEL,
            format="%(levelname)-5.5s [%(name)s] %(message)s",
        )
    logging.getLogger("relpres").setLevel(Settings.LOG_LEVEL)
