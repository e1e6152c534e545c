# logger_manager.py
# Libraries
import os
import logging
import psutil
# Constants
from config.log_constants import LogConstants


class LoggerManager:
    def __init__(self, log_level=LogConstants.LEVEL, console_level=LogConstants.CONSOLE_LEVEL, log_format=None):
        """
        Builds one logger per enumeration component, each writing to its own file and to the console.

        :param log_level: Level of the logger and of its file handler.
        :param console_level: Level of the console handler, usually quieter than the file.
        :param log_format: Custom log format. If None, a default format carrying process resources is used.
        """
        self.loggers = {}
        self.log_level = log_level
        self.console_level = console_level

        if log_format is None:
            self.log_format = ('%(asctime)s - %(name)s - %(levelname)s - PID: %(process)d - '
                               'CPU: %(cpu_percent)s%% - RSS: %(rss_mb).1fMB - %(message)s')
        else:
            self.log_format = log_format

    def get_logger(self, logger_name: str, log_file: str) -> logging.Logger:
        """
        Returns the logger of a component, creating its handlers on first request.

        :param logger_name: Name of the component.
        :param log_file: Path to the log file of this component.
        :return: Configured logger object.
        """
        if logger_name in self.loggers:
            return self.loggers[logger_name]

        logger = logging.getLogger(logger_name)
        logger.setLevel(self.log_level)
        logger.propagate = False
        formatter = ResourceFormatter(self.log_format)

        # Worker processes re-import this module; a logger keeps a single pair of handlers
        if not logger.handlers:
            console_handler = logging.StreamHandler()
            console_handler.setLevel(self.console_level)
            console_handler.setFormatter(formatter)
            logger.addHandler(console_handler)

            file_handler = logging.FileHandler(log_file, delay=True)
            file_handler.setLevel(self.log_level)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        self.loggers[logger_name] = logger
        return logger

    def set_log_level(self, log_level) -> None:
        """
        Sets the logging level for all loggers and their handlers.

        :param log_level: New logging level (e.g., logging.DEBUG, logging.INFO).
        """
        for logger in self.loggers.values():
            logger.setLevel(log_level)
            for handler in logger.handlers:
                handler.setLevel(log_level)


class ResourceFormatter(logging.Formatter):
    """Stamps each record with the CPU share and resident memory of the emitting process."""
    _process = None

    def format(self, record):
        if ResourceFormatter._process is None or ResourceFormatter._process.pid != os.getpid():
            ResourceFormatter._process = psutil.Process(os.getpid())
        record.cpu_percent = ResourceFormatter._process.cpu_percent(interval=None)
        record.rss_mb = ResourceFormatter._process.memory_info().rss / (1024 * 1024)
        return super().format(record)
