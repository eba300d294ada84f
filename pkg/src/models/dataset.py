"""
Dataset Models
==============
Benchmark inputs and their descriptive statistics.
Single Responsibility: Define data structures only.
"""

from dataclasses import dataclass
from enum import Enum

import numpy as np

from src.models.ieee import FloatFormat


class DatasetSource(Enum):
    GENERATED = "generated"
    FILE = "file"


@dataclass(frozen=True)
class Dataset:
    """
    A named sequence of finite bit patterns in one format.

    values holds uint32 (binary32) or uint64 (binary64) patterns.
    dropped counts the non-finite patterns filtered out at load.
    """
    name: str
    format: FloatFormat
    values: np.ndarray
    source: DatasetSource
    dropped: int = 0

    def __len__(self) -> int:
        return int(self.values.shape[0])

    def bit_patterns(self) -> list[int]:
        """Values as native Python ints."""
        return [int(v) for v in self.values]


@dataclass
class DatasetStats:
    """count, integer_count and mean minimal significant digits."""
    count: int = 0
    integer_count: int = 0
    mean_minimal_digits: float = 0.0


@dataclass(frozen=True)
class LineError:
    """One rejected line of a text dataset."""
    line_number: int
    text: str
    reason: str

    def __str__(self) -> str:
        return f"line {self.line_number}: {self.reason} ({self.text!r})"


class DatasetError(Exception):
    """Raised when a dataset cannot be generated or loaded."""
    pass


class DatasetLoadError(DatasetError):
    """Raised with every offending line of a text dataset."""

    def __init__(self, path: str, errors: list[LineError]):
        self.path = path
        self.errors = errors
        shown = "; ".join(str(e) for e in errors[:5])
        more = f" (+{len(errors) - 5} more)" if len(errors) > 5 else ""
        super().__init__(f"{path}: {len(errors)} bad line(s): {shown}{more}")

