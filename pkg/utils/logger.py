import logging
import sys

from utils.settings import log_level

LOGGER_NAME = "tc_arrangements"

_console_handler: logging.StreamHandler | None = None


def configure_logging(level: str | int | None = None) -> logging.Logger:
    """
    Configura il logger del progetto: un solo StreamHandler su stderr,
    così lo stdout resta riservato ai risultati dei comandi.
    """
    global _console_handler

    logger = logging.getLogger(LOGGER_NAME)
    if level is None:
        level = log_level()
    logger.setLevel(level)

    if _console_handler is None:
        _console_handler = logging.StreamHandler(sys.stderr)
        _console_handler.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
        logger.addHandler(_console_handler)
        logger.propagate = False
    else:
        # sys.stderr può essere stato sostituito dopo la prima configurazione
        _console_handler.setStream(sys.stderr)
    return logger


def get_logger(name: str) -> logging.Logger:
    # Logger figlio, es. "tc_arrangements.planner.motion_planner"
    return logging.getLogger(f"{LOGGER_NAME}.{name}")
