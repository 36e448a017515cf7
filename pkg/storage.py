"""
Storage abstraction layer for instance files, reports, traces and exports.
Relative names resolve against the configured output directory; absolute
paths are used as given.
"""

import logging
import os
from abc import ABC, abstractmethod
from typing import Optional

from config import Config

logger = logging.getLogger(__name__)


class StorageBackend(ABC):
    """Abstract base class for storage backends"""

    @abstractmethod
    def save_file(self, filename: str, content: bytes) -> bool:
        """Save file content to storage"""
        pass

    @abstractmethod
    def get_file(self, filename: str) -> Optional[bytes]:
        """Get file content from storage"""
        pass

    @abstractmethod
    def append_line(self, filename: str, line: str) -> bool:
        """Append one text line (JSONL traces)"""
        pass

    def save_text(self, filename: str, text: str) -> bool:
        return self.save_file(filename, text.encode('utf-8'))

    def get_text(self, filename: str) -> Optional[str]:
        content = self.get_file(filename)
        return None if content is None else content.decode('utf-8')


class LocalStorage(StorageBackend):
    """Local filesystem storage backend"""

    def __init__(self, base_dir: str):
        self.base_dir = base_dir
        os.makedirs(base_dir, exist_ok=True)

    def _get_path(self, filename: str) -> str:
        return os.path.join(self.base_dir, filename)

    def save_file(self, filename: str, content: bytes) -> bool:
        try:
            filepath = self._get_path(filename)
            parent = os.path.dirname(filepath)
            if parent:
                os.makedirs(parent, exist_ok=True)
            with open(filepath, 'wb') as f:
                f.write(content)
            return True
        except OSError as e:
            logger.error(f"LocalStorage save error: {e}")
            return False

    def get_file(self, filename: str) -> Optional[bytes]:
        try:
            filepath = self._get_path(filename)
            if os.path.exists(filepath):
                with open(filepath, 'rb') as f:
                    return f.read()
            return None
        except OSError as e:
            logger.error(f"LocalStorage get error: {e}")
            return None

    def append_line(self, filename: str, line: str) -> bool:
        try:
            with open(self._get_path(filename), 'a', encoding='utf-8') as f:
                f.write(line.rstrip('\n') + '\n')
            return True
        except OSError as e:
            logger.error(f"LocalStorage append error: {e}")
            return False


def get_storage_backend(base_dir: Optional[str] = None) -> StorageBackend:
    """
    Factory function to get the storage backend.
    Uses BDNCG_OUTPUT_DIR unless a base directory is given; defaults to the working directory.
    """
    return LocalStorage(base_dir or Config.OUTPUT_DIR or os.getcwd())
