"""
Report Models
=============
Results of bench and verify runs.
Single Responsibility: Define data structures only.
"""

from dataclasses import asdict, dataclass, field
from typing import Optional

CSV_COLUMNS = (
    "algorithm",
    "policy",
    "dataset",
    "count",
    "ns_per_float",
    "variability_pct",
    "mean_chars",
    "mean_sig_digits",
    "fallback_rate",
)


@dataclass
class IterationStats:
    """Dragon4 scaling-loop step counts over a dataset."""
    mean: float
    max: int


@dataclass
class RunReport:
    """One (algorithm, policy, dataset) timing result."""
    algorithm: str
    policy: str
    dataset: str
    count: int
    ns_per_float: float
    mean_chars: float
    mean_sig_digits: float
    repeats: int
    variability_pct: float
    min_ns_per_float: float = 0.0
    max_ns_per_float: float = 0.0
    fallback_rate: Optional[float] = None
    iteration_stats: Optional[IterationStats] = None

    def csv_row(self) -> dict:
        """Values for the CSV columns; fallback_rate is blank outside the fast path."""
        values = asdict(self)
        row = {name: values[name] for name in CSV_COLUMNS}
        if row["fallback_rate"] is None:
            row["fallback_rate"] = ""
        return row


@dataclass(frozen=True)
class Violation:
    """An oracle disagreement, identified by its bit pattern."""
    check: str
    bits: int
    detail: str

    def describe(self, hex_width: int) -> str:
        return f"{self.check}: 0x{self.bits:0{hex_width}X} {self.detail}"


@dataclass
class VerifySummary:
    """Counts merged across verification workers."""
    scope: str
    checked: int = 0
    violations: list[Violation] = field(default_factory=list)
    fastpath_uncertain: int = 0
    dragon2_checked: int = 0
    dragon2_failures: int = 0

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def fallback_rate(self) -> float:
        return self.fastpath_uncertain / self.checked if self.checked else 0.0

    @property
    def dragon2_failure_rate(self) -> float:
        return self.dragon2_failures / self.dragon2_checked if self.dragon2_checked else 0.0

    def merge(self, other: "VerifySummary") -> "VerifySummary":
        self.checked += other.checked
        self.violations.extend(other.violations)
        self.fastpath_uncertain += other.fastpath_uncertain
        self.dragon2_checked += other.dragon2_checked
        self.dragon2_failures += other.dragon2_failures
        return self
