"""
Dataset Service
===============
Concrete implementation of IDatasetService.
Single Responsibility: Produce, persist and describe benchmark datasets.

Raw files are packed little-endian IEEE patterns (.f32le / .f64le); text
files hold one decimal literal per line with '#' comments.
"""

from pathlib import Path
from typing import Callable, Optional

import numpy as np

from src.core.ieee_codec import decode
from src.interfaces.dataset_service import IDatasetService
from src.interfaces.file_service import IFileService
from src.models.dataset import (
    Dataset,
    DatasetError,
    DatasetLoadError,
    DatasetSource,
    DatasetStats,
    LineError,
)
from src.models.ieee import BINARY32, BINARY64, DecodedFloat, FloatFormat, FloatWidth
from src.services.roundtrip_oracle import LiteralSyntaxError, minimal_digit_count, parse_exact
from src.utils.logger import Logger
from src.utils.prng import Xoshiro256StarStar

UNIT_DATASET = "unit"
RAW_EXTENSIONS = {".f32le": BINARY32, ".f64le": BINARY64}

_INT64_LIMIT = 1 << 63


def _storage_dtype(fmt: FloatFormat) -> np.dtype:
    return np.dtype(np.uint32 if fmt.width is FloatWidth.BINARY32 else np.uint64)


def _wire_dtype(fmt: FloatFormat) -> np.dtype:
    return np.dtype("<u4" if fmt.width is FloatWidth.BINARY32 else "<u8")


def _finite_mask(values: np.ndarray, fmt: FloatFormat) -> np.ndarray:
    exponent = (values >> fmt.stored_significand_bits) & fmt.exponent_mask
    return exponent != fmt.exponent_mask


def narrow_unit_draws(draw: np.ndarray) -> np.ndarray:
    """
    binary64 draws in [0, 1) as binary32 values in [0, 1).

    Draws above 1 - 2^-25 round up to 1.0; they are clamped to the largest
    binary32 below one.
    """
    below_one = np.nextafter(np.float32(1), np.float32(0))
    return np.minimum(draw.astype(np.float32), below_one)


def _is_int64(d: DecodedFloat) -> bool:
    if not d.is_integer:
        return False
    value = d.value()
    return -_INT64_LIMIT <= value < _INT64_LIMIT


class DatasetService(IDatasetService):
    """
    Seeded unit generator and file loaders.
    Implements IDatasetService.
    """

    def __init__(
        self,
        file_service: IFileService,
        digit_counter: Optional[Callable[[DecodedFloat], int]] = None
    ):
        """
        Initialize the dataset service.

        Args:
            file_service: File I/O backend
            digit_counter: Minimal significant digits of a nonzero float
                (the exact oracle if not provided)
        """
        self._files = file_service
        self._digit_counter = digit_counter or minimal_digit_count
        self._logger = Logger(prefix="Datasets")

    def generate_unit(self, n: int, seed: int, fmt: FloatFormat) -> Dataset:
        if n <= 0:
            raise DatasetError(f"Dataset size must be positive, got {n}")

        draw = Xoshiro256StarStar(seed).unit_array(n)
        if fmt.width is FloatWidth.BINARY32:
            values = narrow_unit_draws(draw).view(np.uint32)
        else:
            values = draw.view(np.uint64)

        self._logger.data(f"Generated {n} unit values ({fmt}, seed={seed})")
        return Dataset(
            name=f"{UNIT_DATASET}-{fmt.short_name}",
            format=fmt,
            values=values.copy(),
            source=DatasetSource.GENERATED,
        )

    def load_raw(self, path: Path, fmt: FloatFormat) -> Dataset:
        path = Path(path)
        data = self._read(path, binary=True)
        if len(data) % fmt.byte_width:
            raise DatasetError(
                f"{path}: {len(data)} bytes is not a multiple of {fmt.byte_width} ({fmt})"
            )

        values = np.frombuffer(data, dtype=_wire_dtype(fmt)).astype(_storage_dtype(fmt))
        finite = _finite_mask(values, fmt)
        dropped = int(values.size - np.count_nonzero(finite))
        if dropped:
            self._logger.warning(f"{path}: dropped {dropped} non-finite value(s)")

        self._logger.data(f"Loaded {values.size - dropped} values from {path}")
        return Dataset(
            name=path.stem,
            format=fmt,
            values=values[finite],
            source=DatasetSource.FILE,
            dropped=dropped,
        )

    def load_text(self, path: Path, fmt: FloatFormat) -> Dataset:
        path = Path(path)
        text = self._read(path, binary=False)

        patterns: list[int] = []
        errors: list[LineError] = []
        for line_number, line in enumerate(text.splitlines(), start=1):
            literal = line.strip()
            if not literal or literal.startswith("#"):
                continue
            try:
                bits = parse_exact(literal, fmt)
            except LiteralSyntaxError as e:
                errors.append(LineError(line_number, literal, str(e)))
                continue
            if not decode(bits, fmt).is_finite:
                errors.append(LineError(line_number, literal, f"not a finite {fmt} value"))
                continue
            patterns.append(bits)

        if errors:
            raise DatasetLoadError(str(path), errors)

        self._logger.data(f"Parsed {len(patterns)} literals from {path}")
        return Dataset(
            name=path.stem,
            format=fmt,
            values=np.array(patterns, dtype=_storage_dtype(fmt)),
            source=DatasetSource.FILE,
        )

    def save_raw(self, ds: Dataset, path: Path) -> Path:
        data = np.asarray(ds.values).astype(_wire_dtype(ds.format)).tobytes()
        return self._files.write_bytes(data, Path(path))

    def stats(self, ds: Dataset) -> DatasetStats:
        if len(ds) == 0:
            return DatasetStats()

        integer_count = 0
        digit_total = 0
        for bits in ds.bit_patterns():
            d = decode(bits, ds.format)
            if _is_int64(d):
                integer_count += 1
            digit_total += 1 if d.is_zero else self._digit_counter(d)

        return DatasetStats(
            count=len(ds),
            integer_count=integer_count,
            mean_minimal_digits=digit_total / len(ds),
        )

    def load(self, source: str, fmt: FloatFormat, count: int, seed: int) -> Dataset:
        """
        Resolve a dataset source.

        "unit" generates; *.f32le / *.f64le load raw (the extension fixes
        the format); anything else is read as a text file in fmt.
        """
        if source == UNIT_DATASET:
            return self.generate_unit(count, seed, fmt)
        path = Path(source)
        raw_format = RAW_EXTENSIONS.get(path.suffix.lower())
        if raw_format is not None:
            return self.load_raw(path, raw_format)
        return self.load_text(path, fmt)

    def _read(self, path: Path, binary: bool):
        try:
            return self._files.read_bytes(path) if binary else self._files.read_text(path)
        except FileNotFoundError as e:
            raise DatasetError(str(e)) from e
