import logging
import sys
from typing import Optional


def setup_logger(name: str = None, level: int = logging.INFO,
                 log_file: Optional[str] = 'bench.log') -> logging.Logger:
    """Setup logger with console and (optional) file handlers"""

    # If no name provided, configure the root logger
    if name is None:
        logger = logging.getLogger()
    else:
        logger = logging.getLogger(name)

    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    logger.setLevel(level)

    # Remove all handlers before adding new ones to avoid duplicate logs
    if logger.hasHandlers():
        logger.handlers.clear()

    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    handlers = []

    console_handler = logging.StreamHandler(sys.stdout)
    handlers.append(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file, mode='a', encoding='utf-8')
        handlers.append(file_handler)

    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        logger.addHandler(handler)

    # Also set up Flask's logger
    flask_logger = logging.getLogger('werkzeug')
    flask_logger.setLevel(level)
    if not flask_logger.hasHandlers():
        for handler in handlers:
            flask_logger.addHandler(handler)

    return logger
