# hasher.py
# Libraries
import hashlib
import os
# Interfaces
from .ihasher import IHasher


class Hasher(IHasher):
    def __init__(self, algorithm='sha256'):
        self.algorithm = algorithm

    def hash_string(self, data) -> str:
        if isinstance(data, bytes):
            msg_bytes = data
        else:
            msg_bytes = data.encode('utf-8')
        hasher = hashlib.new(self.algorithm)
        hasher.update(msg_bytes)
        return hasher.hexdigest()

    def hash_file(self, file_path: str) -> str:
        hasher = hashlib.new(self.algorithm)
        try:
            with open(file_path, 'rb') as file:
                for chunk in iter(lambda: file.read(4096), b""):
                    hasher.update(chunk)
        except OSError as exc:
            raise OSError(f"Cannot hash '{file_path}': {exc.strerror or exc}") from exc
        return hasher.hexdigest()

    def hash_files(self, file_paths: list[str]) -> str:
        entries = sorted((os.path.basename(path), self.hash_file(path)) for path in file_paths)
        return self.hash_string('\n'.join(f"{name} {digest}" for name, digest in entries))

    def hash_directory(self, dir_path: str, suffix: str = '') -> str:
        try:
            names = sorted(os.listdir(dir_path))
        except OSError as exc:
            raise OSError(f"Cannot list '{dir_path}': {exc.strerror or exc}") from exc
        paths = [os.path.join(dir_path, name) for name in names
                 if name.endswith(suffix) and os.path.isfile(os.path.join(dir_path, name))]
        return self.hash_files(paths)
