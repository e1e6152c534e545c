# file_manager.py
# Libraries
import os
# Interfaces
from utils.ifile_manager import IFileManager


class FileManager(IFileManager):
    def create_directory(self, dir_path: str) -> None:
        try:
            os.makedirs(dir_path, exist_ok=True)
        except OSError as exc:
            raise OSError(f"Cannot create directory '{dir_path}': {exc.strerror or exc}") from exc

    def write_text(self, path: str, content: str, encoding: str = 'utf-8') -> None:
        try:
            with open(path, 'w', encoding=encoding, newline='\n') as file:
                file.write(content)
        except OSError as exc:
            raise OSError(f"Cannot write '{path}': {exc.strerror or exc}") from exc

    def read_line(self, path: str, line_number: int, encoding: str = 'utf-8') -> str:
        if line_number < 1:
            raise ValueError(f"Line numbers start at 1, got {line_number}")
        try:
            with open(path, 'r', encoding=encoding) as file:
                for current, line in enumerate(file, start=1):
                    if current == line_number:
                        return line.rstrip('\r\n')
        except OSError as exc:
            raise OSError(f"Cannot read '{path}': {exc.strerror or exc}") from exc
        raise ValueError(f"'{path}' has fewer than {line_number} lines")
