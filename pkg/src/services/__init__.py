"""
Service Implementations
=======================
Concrete implementations of the interfaces.
"""

from src.services.dragon import Dragon2Converter, Dragon4Converter, Dragon4FastScaledConverter
from src.services.fastpath import FastPathConverter, PowerOfTenCache, default_cache
from src.services.renderer import RenderPolicy, RenderedString, format_float, render
from src.services.dataset_service import DatasetService
from src.services.local_file_service import LocalFileService

__all__ = [
    "Dragon2Converter",
    "Dragon4Converter",
    "Dragon4FastScaledConverter",
    "FastPathConverter",
    "PowerOfTenCache",
    "default_cache",
    "RenderPolicy",
    "RenderedString",
    "format_float",
    "render",
    "DatasetService",
    "LocalFileService",
]
