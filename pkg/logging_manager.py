"""
Logging functionality for hopfwords
"""
import logging
import time

import config

# Configure logging
logging.basicConfig(level=getattr(logging, config.LOG_LEVEL.upper(), logging.WARNING),
                    format='%(asctime)s - %(levelname)s - %(message)s')

# Recent messages, attached to saved verification reports
log_buffer = []

# Our application logger
logger = logging.getLogger('hopfwords')


class FunctionLoggingDisabled:
    """Context manager to temporarily silence the hopfwords logger"""
    def __enter__(self):
        self.logger_level = logger.level
        logger.setLevel(logging.CRITICAL)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        logger.setLevel(self.logger_level)


def add_log(message, level="info"):
    """Add a log message to the buffer and the standard logger"""
    timestamp = time.strftime("%Y-%m-%d %H:%M:%S")
    log_buffer.append({"timestamp": timestamp, "message": message, "level": level})

    if level == "error":
        logger.error(message)
    elif level == "warning":
        logger.warning(message)
    elif level == "debug":
        logger.debug(message)
    else:
        logger.info(message)

    if len(log_buffer) > config.LOG_BUFFER_SIZE:
        log_buffer.pop(0)


def get_logs():
    """Return the log buffer"""
    return log_buffer


def clear_logs():
    """Empty the log buffer"""
    del log_buffer[:]


def set_log_level(level):
    """Set the level of the hopfwords logger by name or number"""
    if isinstance(level, str):
        level = getattr(logging, level.upper(), logging.INFO)
    logger.setLevel(level)
