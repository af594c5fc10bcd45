"""
Logging setup
Console and dated file handlers shared by the library and the CLI
"""

import logging
import os
from datetime import datetime

import config

_CONFIGURED = False


def setup_logging(level=None, log_to_file=None):
    """
    Install handlers on the root logger once

    Args:
        level: Logging level name, defaults to config.LOG_LEVEL
        log_to_file: Write a dated log file in config.LOG_DIRECTORY

    Returns:
        The root logger
    """
    global _CONFIGURED
    logger = logging.getLogger()
    if _CONFIGURED:
        return logger

    level = level or config.LOG_LEVEL
    logger.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    if log_to_file is None:
        log_to_file = config.ENABLE_FILE_LOGGING
    if log_to_file:
        if not os.path.exists(config.LOG_DIRECTORY):
            os.makedirs(config.LOG_DIRECTORY)
        log_file = os.path.join(
            config.LOG_DIRECTORY,
            f"tqdlab_{datetime.now().strftime('%Y%m%d')}.log"
        )
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(
            logging.Formatter('%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        logger.addHandler(file_handler)

    # Console goes to stderr so JSON reports on stdout stay clean
    console_handler = logging.StreamHandler()
    console_handler.setFormatter(logging.Formatter('%(asctime)s - %(levelname)s - %(message)s'))
    logger.addHandler(console_handler)

    _CONFIGURED = True
    return logger
