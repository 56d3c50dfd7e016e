import os
from abc import ABC, abstractmethod
from typing import Any

from utils.exceptions import ExportError


class BaseRepository(ABC):
    """Base repository for results persisted as plain-text files"""

    @abstractmethod
    def save(self, record: Any, path: str) -> str:
        """Write a record, return the path written"""
        pass

    @abstractmethod
    def load(self, path: str) -> Any:
        """Read a record back"""
        pass

    @staticmethod
    def ensure_parent(path: str) -> str:
        """Create the parent directory of path, raising ExportError if that fails"""
        parent = os.path.dirname(os.path.abspath(path))
        try:
            os.makedirs(parent, exist_ok=True)
        except OSError as e:
            raise ExportError(f"Cannot create output directory {parent}: {e}") from e
        return path

    @staticmethod
    def sibling_path(path: str, suffix: str) -> str:
        """results/fA.csv + '.poles.csv' -> results/fA.poles.csv"""
        root, ext = os.path.splitext(path)
        if ext.lower() != '.csv':
            root = path
        return root + suffix
