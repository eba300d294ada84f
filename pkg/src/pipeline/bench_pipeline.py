"""
Bench Pipeline
==============
Timing orchestrator for converters over datasets.
Single Responsibility: Orchestrates timed and untimed passes only.
Dependency Inversion: Depends on abstractions via DependencyContainer.

Each (algorithm, policy) pair gets `repeats` single-threaded timed passes
writing into a preallocated buffer, followed by one untimed pass that
measures output length, significant digits and fast-path fallbacks.
"""

import csv
import io
import time
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from src.core.exact_decimal import significant_digits
from src.core.ieee_codec import decode
from src.interfaces.converter import IShortestConverter
from src.models.config import AppConfig
from src.models.dataset import Dataset
from src.models.ieee import DecodedFloat, FloatFormat
from src.models.report import CSV_COLUMNS, IterationStats, RunReport
from src.pipeline.container import DependencyContainer
from src.services.dragon import dragon4_fast_scaled_traced, dragon4_traced
from src.services.fastpath import FastPathConverter
from src.services.renderer import RenderPolicy, format_float, render
from src.utils.logger import Logger

_TRACED = {
    "dragon4": dragon4_traced,
    "dragon4-fast": dragon4_fast_scaled_traced,
}


class PipelineError(Exception):
    """Exception raised when bench or verify orchestration fails."""
    pass


def format_csv(reports: Sequence[RunReport]) -> str:
    """Reports as CSV text with the fixed column order."""
    out = io.StringIO()
    writer = csv.DictWriter(out, fieldnames=list(CSV_COLUMNS), lineterminator="\n")
    writer.writeheader()
    for report in reports:
        writer.writerow(report.csv_row())
    return out.getvalue()


class BenchPipeline:
    """
    Benchmark orchestrator.

    Usage:
        pipeline = BenchPipeline(config=AppConfig.with_bench(repeats=10))
        reports = pipeline.run("unit", BINARY64, csv_path=Path("out.csv"))
    """

    def __init__(
        self,
        config: Optional[AppConfig] = None,
        container: Optional[DependencyContainer] = None
    ):
        """
        Initialize the pipeline.

        Args:
            config: Application configuration (ignored if container provided)
            container: Pre-configured dependency container
        """
        if container:
            self._container = container
        else:
            self._container = DependencyContainer(config or AppConfig.default())

        self._logger = Logger(prefix="Bench")

    @property
    def container(self) -> DependencyContainer:
        return self._container

    def run(
        self,
        source: str,
        fmt: FloatFormat,
        algorithms: Optional[Sequence[str]] = None,
        policies: Optional[Sequence[str]] = None,
        count: Optional[int] = None,
        csv_path: Optional[Path] = None
    ) -> list[RunReport]:
        """
        Benchmark every (algorithm, policy) pair over one dataset.

        Args:
            source: "unit" or a dataset file path
            fmt: Format for generated and text datasets
            algorithms: Converter names (config defaults if not provided)
            policies: Policy names (config defaults if not provided)
            count: Generated dataset size (config default if not provided)
            csv_path: Optional CSV destination

        Returns:
            One RunReport per pair

        Raises:
            UnknownAlgorithmError, UnknownPolicyError: For bad names
            PipelineError: For an empty dataset
        """
        settings = self._container.config.bench
        converters = [self._container.converter(n) for n in (algorithms or settings.algorithms)]
        render_policies = [RenderPolicy.from_name(p) for p in (policies or settings.policies)]

        ds = self._container.dataset_service.load(
            source, fmt, count or settings.unit_count, settings.seed
        )
        if len(ds) == 0:
            raise PipelineError(f"Dataset {ds.name} is empty; nothing to time")

        reports = [
            self.measure(ds, converter, policy, settings.repeats)
            for converter in converters
            for policy in render_policies
        ]

        if csv_path is not None:
            self.write_csv(reports, csv_path)
        return reports

    def measure(
        self,
        ds: Dataset,
        converter: IShortestConverter,
        policy: RenderPolicy,
        repeats: int
    ) -> RunReport:
        """Time one (converter, policy) pair and collect output metrics."""
        if repeats < 1:
            raise PipelineError(f"repeats must be at least 1, got {repeats}")

        decoded = [decode(bits, ds.format) for bits in ds.bit_patterns()]
        buffer: list[str] = [""] * len(decoded)
        timings = np.empty(repeats, dtype=np.int64)
        for i in range(repeats):
            timings[i] = self._timed_pass(converter, policy, decoded, buffer)

        median = float(np.median(timings))
        fastest, slowest = int(timings.min()), int(timings.max())
        report = RunReport(
            algorithm=converter.name,
            policy=policy.value,
            dataset=ds.name,
            count=len(decoded),
            ns_per_float=median / len(decoded),
            mean_chars=0.0,
            mean_sig_digits=0.0,
            repeats=repeats,
            variability_pct=(slowest - fastest) / median * 100.0 if median else 0.0,
            min_ns_per_float=fastest / len(decoded),
            max_ns_per_float=slowest / len(decoded),
        )
        self._quality_pass(report, converter, policy, decoded)

        self._logger.bench(
            f"{converter.name:>12} {policy.value:>7} {ds.name}: "
            f"{report.ns_per_float:.1f} ns/f (±{report.variability_pct:.1f}%), "
            f"{report.mean_chars:.3f} chars, {report.mean_sig_digits:.3f} digits"
        )
        return report

    @staticmethod
    def _timed_pass(
        converter: IShortestConverter,
        policy: RenderPolicy,
        decoded: list[DecodedFloat],
        buffer: list[str]
    ) -> int:
        convert = converter.convert
        start = time.perf_counter_ns()
        for i, d in enumerate(decoded):
            buffer[i] = render(convert(d), policy).text
        return time.perf_counter_ns() - start

    @staticmethod
    def _quality_pass(
        report: RunReport,
        converter: IShortestConverter,
        policy: RenderPolicy,
        decoded: list[DecodedFloat]
    ) -> None:
        chars = 0
        digits = 0
        uncertain = 0
        iterations: list[int] = []
        traced = _TRACED.get(converter.name)
        fast = converter if isinstance(converter, FastPathConverter) else None

        for d in decoded:
            chars += format_float(d, policy, converter).length
            digits += significant_digits(converter.convert(d))
            if d.is_zero:
                continue
            if fast is not None and not fast.certainty(d).certain:
                uncertain += 1
            if traced is not None:
                iterations.append(traced(d).scale_iterations)

        report.mean_chars = chars / len(decoded)
        report.mean_sig_digits = digits / len(decoded)
        if fast is not None:
            report.fallback_rate = uncertain / len(decoded)
        if iterations:
            report.iteration_stats = IterationStats(
                mean=float(np.mean(iterations)), max=int(np.max(iterations))
            )

    def write_csv(self, reports: Sequence[RunReport], path: Path) -> Path:
        """Write reports with the fixed column order."""
        path = Path(path)
        return self._container.file_service.save(
            format_csv(reports), path.stem, path.suffix.lstrip(".") or "csv", directory=path.parent
        )
