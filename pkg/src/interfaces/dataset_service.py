"""
Dataset Service Interface
=========================
Single Responsibility: Define contract for producing and describing datasets.
Open/Closed: New dataset sources plug in without touching bench or verify.
"""

from abc import ABC, abstractmethod
from pathlib import Path

from src.models.dataset import Dataset, DatasetStats
from src.models.ieee import FloatFormat


class IDatasetService(ABC):
    """
    Abstract interface for benchmark datasets.

    Implementations:
    - DatasetService: seeded unit generator plus raw/text file loaders
    """

    @abstractmethod
    def generate_unit(self, n: int, seed: int, fmt: FloatFormat) -> Dataset:
        """
        Draw n uniform values in [0, 1).

        Args:
            n: Number of values (positive)
            seed: Generator seed
            fmt: Output format; binary32 narrows the binary64 draw

        Returns:
            Generated dataset
        """
        pass

    @abstractmethod
    def load_raw(self, path: Path, fmt: FloatFormat) -> Dataset:
        """Load packed little-endian bit patterns, dropping non-finite ones."""
        pass

    @abstractmethod
    def load_text(self, path: Path, fmt: FloatFormat) -> Dataset:
        """Load one decimal literal per line through the exact parser."""
        pass

    @abstractmethod
    def save_raw(self, ds: Dataset, path: Path) -> Path:
        """Write packed little-endian bit patterns."""
        pass

    @abstractmethod
    def stats(self, ds: Dataset) -> DatasetStats:
        """Count, int64-representable count and mean minimal digits."""
        pass

    @abstractmethod
    def load(self, source: str, fmt: FloatFormat, count: int, seed: int) -> Dataset:
        """Resolve a built-in generator name or a file path to a dataset."""
        pass
