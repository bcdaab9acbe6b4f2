import logging
import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    """Application configuration class."""

    # Logging (diagnostics go to stderr; data output never depends on these)
    LOG_LEVEL = os.getenv('LSCVT_LOG_LEVEL', 'WARNING').upper()
    LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

    # Boolean rule used when none is given
    DEFAULT_RULE = 3

    # Resource caps
    MAX_GRID_ORDER = 4096  # width 12, ~16M cells
    MAX_ROTATION_WIDTH = 8  # 65,536 ports
    MAX_EFFICIENCY_WIDTH = 64
    MAX_WALSH_K = 10
    MAX_SURVEY_LEVEL = 4095  # largest level whose natural order fits MAX_GRID_ORDER
    WORD_BITS = 64

    # simulate() replays standby_set literally while cells * ticks stays under this
    BRUTE_FORCE_BUDGET = 4_000_000

    # Report output
    REPORT_DECIMALS = 6

    @classmethod
    def validate(cls):
        """Validate that the configuration is usable."""
        valid_levels = ['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL']

        if cls.LOG_LEVEL not in valid_levels:
            raise ValueError(
                f"Invalid LSCVT_LOG_LEVEL: {cls.LOG_LEVEL}. "
                f"Must be one of {', '.join(valid_levels)}."
            )

    @classmethod
    def log_level(cls) -> int:
        """Return the numeric logging level, falling back to WARNING."""
        try:
            cls.validate()
        except ValueError:
            return logging.WARNING
        return getattr(logging, cls.LOG_LEVEL)
