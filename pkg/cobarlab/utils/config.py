import logging

from os import getenv

logger = logging.getLogger(__name__)


def _int_env(name: str, default: int, minimum: int = 0) -> int:
    raw = getenv(name)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning("%s=%r is not an integer, using %d", name, raw, default)
        return default
    if value < minimum:
        logger.warning("%s=%d is below %d, using %d", name, value, minimum, default)
        return default
    return value


class Config:
    def __init__(self) -> None:
        self.ring = getenv("COBARLAB_RING", "Z")
        self.max_degree = _int_env("COBARLAB_MAX_DEGREE", 6)
        self.max_length = _int_env("COBARLAB_MAX_LENGTH", 8)
        self.necklace_bound = _int_env("COBARLAB_NECKLACE_BOUND", 8, minimum=1)
        self.nerve_bound = _int_env("COBARLAB_NERVE_BOUND", 3)
        self.enumeration_limit = _int_env("COBARLAB_ENUMERATION_LIMIT", 200000, minimum=1)

        level = getenv("COBARLAB_LOG_LEVEL", "WARNING").upper()
        if not isinstance(logging.getLevelName(level), int):
            logger.warning("COBARLAB_LOG_LEVEL=%r is not a logging level, using WARNING", level)
            level = "WARNING"
        self.log_level = level
        self.report_timing = getenv("COBARLAB_REPORT_TIMING", "0") not in ("", "0", "false", "no")


cfg = Config()
