"""
Application Configuration
=========================
Centralized configuration for the application.
Single Responsibility: Manage application settings only.
"""

from dataclasses import dataclass, field
from pathlib import Path

DEFAULT_ALGORITHMS = ("dragon4", "dragon4-fast", "fastpath")
DEFAULT_POLICIES = ("c", "minimal", "sci")


@dataclass
class BenchConfig:
    """Timing harness settings."""
    repeats: int = 100                 # timed passes per (algorithm, policy)
    unit_count: int = 100_000          # size of the generated unit dataset
    seed: int = 1
    algorithms: tuple[str, ...] = DEFAULT_ALGORITHMS
    policies: tuple[str, ...] = DEFAULT_POLICIES


@dataclass
class VerifyConfig:
    """Oracle-check settings."""
    strata_fractions: int = 4096       # fractions per exponent in the binary32 sweep
    seed: int = 1
    workers: int = 1
    dragon2_sample: int = 10_000       # cap on values used for the dragon2 failure rate


@dataclass
class AppConfig:
    """
    Application-wide configuration.
    Follows Single Responsibility: Only manages configuration values.
    """
    bench: BenchConfig = field(default_factory=BenchConfig)
    verify: VerifyConfig = field(default_factory=VerifyConfig)
    output_dir: Path = field(default_factory=lambda: Path("outputs"))
    quiet: bool = False

    @classmethod
    def default(cls) -> "AppConfig":
        """Create default configuration."""
        return cls()

    @classmethod
    def with_bench(cls, repeats: int = 100, seed: int = 1) -> "AppConfig":
        """Create configuration with custom timing settings."""
        return cls(bench=BenchConfig(repeats=repeats, seed=seed))
