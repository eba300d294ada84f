"""
Data Models
===========
Defines data structures used across the application.
"""

from src.models.ieee import (
    BINARY32,
    BINARY64,
    DecodedFloat,
    FloatClass,
    FloatDomainError,
    FloatFormat,
    FloatWidth,
    RoundTripInterval,
    Sign,
)
from src.models.decimal_fp import DecimalFP
from src.models.dataset import Dataset, DatasetSource, DatasetStats
from src.models.report import RunReport, VerifySummary, Violation
from src.models.config import AppConfig, BenchConfig, VerifyConfig

__all__ = [
    "BINARY32",
    "BINARY64",
    "DecodedFloat",
    "FloatClass",
    "FloatDomainError",
    "FloatFormat",
    "FloatWidth",
    "RoundTripInterval",
    "Sign",
    "DecimalFP",
    "Dataset",
    "DatasetSource",
    "DatasetStats",
    "RunReport",
    "VerifySummary",
    "Violation",
    "AppConfig",
    "BenchConfig",
    "VerifyConfig",
]
