# ihasher.py
# Libraries
from abc import ABC, abstractmethod


class IHasher(ABC):
    """
    Hasher fingerprints the outputs of a run so that two runs can be checked for byte identity.
    """

    @abstractmethod
    def hash_string(self, input_string) -> str:
        pass

    @abstractmethod
    def hash_file(self, file_path: str) -> str:
        """
        Raises:
            OSError: If the file cannot be read.
        """
        pass

    @abstractmethod
    def hash_files(self, file_paths: list[str]) -> str:
        """
        Digest of a set of files: the per-file digests, keyed by base name, hashed in name order.
        """
        pass

    @abstractmethod
    def hash_directory(self, dir_path: str, suffix: str = '') -> str:
        """
        Digest of the regular files of a directory whose names end with the suffix.
        """
        pass
