# ifile_manager.py
# Libraries
from abc import ABC, abstractmethod


class IFileManager(ABC):
    """
    FileManager wraps the few filesystem operations the enumerator needs, so that every
    failure surfaces as an OSError naming the offending path.
    """

    @abstractmethod
    def create_directory(self, dir_path: str) -> None:
        """
        Creates a directory (and its parents) if it does not already exist.

        Raises:
            OSError: If the directory cannot be created.
        """
        pass

    @abstractmethod
    def write_text(self, path: str, content: str, encoding: str = 'utf-8') -> None:
        """
        Writes text to a file, replacing any previous content.

        Raises:
            OSError: If the file cannot be written.
        """
        pass

    @abstractmethod
    def read_line(self, path: str, line_number: int, encoding: str = 'utf-8') -> str:
        """
        Returns the given 1-based line of a text file, without its line terminator.

        Raises:
            OSError: If the file cannot be read.
            ValueError: If the file has fewer lines than requested.
        """
        pass
