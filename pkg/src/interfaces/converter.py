"""
Shortest Converter Interface
============================
Single Responsibility: Define the contract for binary -> decimal conversion.
Liskov Substitution: Any converter can stand in for another in bench/verify.
"""

from abc import ABC, abstractmethod

from src.models.decimal_fp import DecimalFP
from src.models.ieee import DecodedFloat, FloatDomainError


class IShortestConverter(ABC):
    """
    Abstract free-format float -> decimal converter.

    Implementations:
    - Dragon2Converter: native-float approximation (inexact)
    - Dragon4Converter: exact big-integer Dragon4
    - Dragon4FastScaledConverter: Dragon4 with estimated scaling
    - FastPathConverter: cached-power fast path with Dragon4 fallback
    """

    name: str = ""
    exact: bool = True

    def convert(self, d: DecodedFloat) -> DecimalFP:
        """
        Convert a finite float to its decimal significand and exponent.

        Zeros pass through with their sign as (0, 0).

        Raises:
            FloatDomainError: For infinities and NaN
        """
        if not d.is_finite:
            raise FloatDomainError(f"Cannot convert {d.float_class.value} to a decimal")
        if d.is_zero:
            return DecimalFP.zero(d.sign)
        return self._convert_nonzero(d)

    @abstractmethod
    def _convert_nonzero(self, d: DecodedFloat) -> DecimalFP:
        """Convert a nonzero finite float."""
        pass

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r})"
