"""
Dependency Container
====================
Dependency Injection container for managing service instances.
Follows Dependency Inversion Principle (DIP).
Open/Closed: New converters register by name without modifying the pipelines.
"""

from typing import Callable, Optional

from src.interfaces import IDatasetService, IFileService, IShortestConverter
from src.models.config import AppConfig
from src.services import (
    DatasetService,
    Dragon2Converter,
    Dragon4Converter,
    Dragon4FastScaledConverter,
    FastPathConverter,
    LocalFileService,
    PowerOfTenCache,
    default_cache,
)
from src.utils.logger import Logger


class UnknownAlgorithmError(KeyError):
    """Raised when a converter name is not registered."""
    pass


class DependencyContainer:
    """
    Dependency Injection container.

    Manages service instances and the converter registry.
    Follows DIP: Pipelines depend on abstractions.

    Usage:
        container = DependencyContainer(config)
        converter = container.converter("fastpath")
        datasets = container.dataset_service
    """

    def __init__(self, config: Optional[AppConfig] = None):
        """
        Initialize the container with configuration.

        Args:
            config: Application configuration (uses default if not provided)
        """
        self._config = config or AppConfig.default()
        self._logger = Logger(prefix="Container")

        # Service instances (lazy initialization)
        self._file_service: Optional[IFileService] = None
        self._dataset_service: Optional[IDatasetService] = None
        self._power_cache: Optional[PowerOfTenCache] = None
        self._converters: dict[str, IShortestConverter] = {}
        self._factories: dict[str, Callable[[], IShortestConverter]] = {
            Dragon2Converter.name: Dragon2Converter,
            Dragon4Converter.name: Dragon4Converter,
            Dragon4FastScaledConverter.name: Dragon4FastScaledConverter,
            FastPathConverter.name: lambda: FastPathConverter(self.power_cache),
        }

    @property
    def config(self) -> AppConfig:
        """Get the application configuration."""
        return self._config

    @property
    def file_service(self) -> IFileService:
        """Get the file service instance."""
        if self._file_service is None:
            self._file_service = LocalFileService(output_dir=self._config.output_dir)
        return self._file_service

    @property
    def dataset_service(self) -> IDatasetService:
        """Get the dataset service instance (with dependencies injected)."""
        if self._dataset_service is None:
            self._dataset_service = DatasetService(file_service=self.file_service)
        return self._dataset_service

    @property
    def power_cache(self) -> PowerOfTenCache:
        """Get the shared power-of-ten table."""
        if self._power_cache is None:
            self._power_cache = default_cache()
            self._logger.info(
                f"Power-of-ten cache: {len(self._power_cache)} entries "
                f"(10^{self._power_cache.min_decimal_exponent}..10^{self._power_cache.max_decimal_exponent})"
            )
        return self._power_cache

    @property
    def algorithm_names(self) -> list[str]:
        return sorted(self._factories)

    def converter(self, name: str) -> IShortestConverter:
        """
        Get a converter by its CLI name.

        Raises:
            UnknownAlgorithmError: If no converter is registered under name
        """
        if name not in self._converters:
            factory = self._factories.get(name)
            if factory is None:
                raise UnknownAlgorithmError(
                    f"Unknown algorithm: {name!r} (expected one of {', '.join(self.algorithm_names)})"
                )
            self._converters[name] = factory()
        return self._converters[name]

    # === Setters for custom implementations (DIP) ===

    def set_converter(self, name: str, converter: IShortestConverter) -> "DependencyContainer":
        """Register or replace a converter under name."""
        self._factories[name] = lambda: converter
        self._converters[name] = converter
        return self

    def set_file_service(self, service: IFileService) -> "DependencyContainer":
        """
        Set a custom file service implementation.
        Useful for testing with temporary directories.
        """
        self._file_service = service
        # Reset dependent services
        self._dataset_service = None
        return self

    def set_dataset_service(self, service: IDatasetService) -> "DependencyContainer":
        """Set a custom dataset service implementation."""
        self._dataset_service = service
        return self
