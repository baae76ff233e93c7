import logging

from config.settings import Settings

logger = logging.getLogger(__name__)


def initialize_logging(settings: Settings, verbose: bool = False) -> None:
    """Initialize logging configuration."""
    level = logging.DEBUG if verbose else getattr(logging, settings.log_level.upper())
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    logger.info("Logging initialized")
