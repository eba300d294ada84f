"""
IEEE 754 Models
===============
Value types for binary32/binary64 floats in integral-significand form.
Single Responsibility: Define data structures only.

A finite float is held as (-1)^sign * m * 2^p with an integer significand m.
Normals carry the implicit leading bit inside m; subnormals share the minimum
exponent and have no implicit bit, so both go through one code path.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class FloatDomainError(ValueError):
    """Raised when an operation needs a finite (or finite nonzero) float."""
    pass


class FloatWidth(Enum):
    """Supported binary interchange widths."""
    BINARY32 = 32
    BINARY64 = 64


class Sign(Enum):
    """Sign of a float or decimal; -0 and +0 stay distinct."""
    POSITIVE = 0
    NEGATIVE = 1

    @property
    def prefix(self) -> str:
        return "-" if self is Sign.NEGATIVE else ""


class FloatClass(Enum):
    """Classification of a decoded bit pattern."""
    ZERO = "zero"
    SUBNORMAL = "subnormal"
    NORMAL = "normal"
    INFINITY = "infinity"
    NAN = "nan"


@dataclass(frozen=True)
class FloatFormat:
    """
    Layout parameters of a binary format.

    The decimal exponent limits are the cut-offs the exact parser uses to
    short-circuit literals that certainly overflow or underflow.
    """
    width: FloatWidth
    exponent_bits: int
    stored_significand_bits: int
    max_exact_digits: int
    min_exponent: int
    max_decimal_exponent: int
    underflow_decimal_exponent: int

    @property
    def total_bits(self) -> int:
        return self.width.value

    @property
    def byte_width(self) -> int:
        return self.width.value // 8

    @property
    def precision(self) -> int:
        """Significand precision in bits, implicit bit included."""
        return self.stored_significand_bits + 1

    @property
    def bias(self) -> int:
        return (1 << (self.exponent_bits - 1)) - 1

    @property
    def max_biased_exponent(self) -> int:
        """Largest biased exponent of a finite value."""
        return (1 << self.exponent_bits) - 2

    @property
    def hidden_bit(self) -> int:
        return 1 << self.stored_significand_bits

    @property
    def fraction_mask(self) -> int:
        return self.hidden_bit - 1

    @property
    def exponent_mask(self) -> int:
        return (1 << self.exponent_bits) - 1

    @property
    def sign_bit(self) -> int:
        return 1 << (self.total_bits - 1)

    @property
    def min_p(self) -> int:
        """Exponent p of subnormals and of the smallest normal binade."""
        return self.min_exponent - self.stored_significand_bits

    @property
    def max_p(self) -> int:
        return self.max_biased_exponent - self.bias - self.stored_significand_bits

    @property
    def infinity_bits(self) -> int:
        return self.exponent_mask << self.stored_significand_bits

    @property
    def quiet_nan_bits(self) -> int:
        return self.infinity_bits | (1 << (self.stored_significand_bits - 1))

    @property
    def short_name(self) -> str:
        return f"f{self.total_bits}"

    @classmethod
    def from_name(cls, name: str) -> "FloatFormat":
        """Resolve 'f32', 'binary32', 'float' (and the 64-bit spellings)."""
        key = name.strip().lower()
        if key in ("f32", "binary32", "float", "float32", "single"):
            return BINARY32
        if key in ("f64", "binary64", "double", "float64"):
            return BINARY64
        raise ValueError(f"Unknown float format: {name!r}")

    def __str__(self) -> str:
        return self.width.name.lower()


BINARY32 = FloatFormat(
    width=FloatWidth.BINARY32,
    exponent_bits=8,
    stored_significand_bits=23,
    max_exact_digits=9,
    min_exponent=-126,
    max_decimal_exponent=38,
    underflow_decimal_exponent=-46,
)

BINARY64 = FloatFormat(
    width=FloatWidth.BINARY64,
    exponent_bits=11,
    stored_significand_bits=52,
    max_exact_digits=17,
    min_exponent=-1022,
    max_decimal_exponent=308,
    underflow_decimal_exponent=-324,
)


@dataclass(frozen=True)
class DecodedFloat:
    """
    A float as sign, integral significand m and binary exponent p.

    For ZERO, INFINITY and NAN the pair (m, p) is (0, 0).
    """
    sign: Sign
    m: int
    p: int
    float_class: FloatClass
    format: FloatFormat

    @property
    def is_finite(self) -> bool:
        return self.float_class not in (FloatClass.INFINITY, FloatClass.NAN)

    @property
    def is_zero(self) -> bool:
        return self.float_class is FloatClass.ZERO

    @property
    def is_negative(self) -> bool:
        return self.sign is Sign.NEGATIVE

    @property
    def is_integer(self) -> bool:
        """True when the finite value has no fractional part."""
        if not self.is_finite:
            return False
        return self.p >= 0 or self.m % (1 << -self.p) == 0

    def magnitude(self) -> Fraction:
        """Exact absolute value as a rational."""
        if not self.is_finite:
            raise FloatDomainError(f"{self.float_class.value} has no exact value")
        if self.p >= 0:
            return Fraction(self.m << self.p)
        return Fraction(self.m, 1 << -self.p)

    def value(self) -> Fraction:
        """Exact signed value as a rational (zero loses its sign)."""
        magnitude = self.magnitude()
        return -magnitude if self.is_negative else magnitude


@dataclass(frozen=True)
class RoundTripInterval:
    """
    Exact round-trip interval of a nonzero finite float.

    All endpoints are integer numerators over the common power of two
    2^exponent: low * 2^exponent is the midpoint to the next smaller float,
    high * 2^exponent the midpoint to the next larger one, and
    value * 2^exponent the float itself. Endpoints are admitted when the
    significand is even (round-half-to-even parsing maps them back).
    """
    low: int
    value: int
    high: int
    exponent: int
    low_inclusive: bool
    high_inclusive: bool

    def _scale(self, numerator: int) -> tuple[int, int]:
        if self.exponent >= 0:
            return numerator << self.exponent, 1
        return numerator, 1 << -self.exponent

    @property
    def low_num(self) -> int:
        return self._scale(self.low)[0]

    @property
    def low_den(self) -> int:
        return self._scale(self.low)[1]

    @property
    def high_num(self) -> int:
        return self._scale(self.high)[0]

    @property
    def high_den(self) -> int:
        return self._scale(self.high)[1]

    @property
    def lower(self) -> Fraction:
        return Fraction(self.low_num, self.low_den)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.high_num, self.high_den)

    @property
    def center(self) -> Fraction:
        num, den = self._scale(self.value)
        return Fraction(num, den)

    def contains(self, x: Fraction) -> bool:
        """True when a decimal of magnitude x parses back to this float."""
        lower, upper = self.lower, self.upper
        above = x >= lower if self.low_inclusive else x > lower
        below = x <= upper if self.high_inclusive else x < upper
        return above and below
