# log_constants.py
# Libraries
import logging


class LogConstants:
    LOG_PATH = 'logs'
    LEVEL = logging.INFO
    CONSOLE_LEVEL = logging.WARNING
    FILE_SUFFIX = '.log'
