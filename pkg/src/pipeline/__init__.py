"""
Pipeline Module
===============
Contains the dependency container, the bench and verify orchestrators and
the command-line front end.
"""

from src.pipeline.container import DependencyContainer, UnknownAlgorithmError
from src.pipeline.bench_pipeline import BenchPipeline, PipelineError
from src.pipeline.verify_pipeline import VerifyPipeline, VerifyScope
from src.pipeline.cli import main

__all__ = [
    "DependencyContainer",
    "UnknownAlgorithmError",
    "BenchPipeline",
    "PipelineError",
    "VerifyPipeline",
    "VerifyScope",
    "main",
]
