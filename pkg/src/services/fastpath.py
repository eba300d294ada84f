"""
Cached-Power Fast Path
======================
Fixed-precision shortest conversion in the Grisu lineage.

The three interval points (lower midpoint, value, upper midpoint) are held
as 64-bit DiyFp significands and multiplied by a 128-bit truncated power of
ten. Each product is known to within two units, so the digit search works on
a provably-inside interval and a possibly-inside interval; whenever the two
disagree about the answer the result is flagged uncertain and shortest()
falls back to Dragon4.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from src.core.ieee_codec import boundaries
from src.interfaces.converter import IShortestConverter
from src.models.decimal_fp import DecimalFP
from src.models.ieee import BINARY64, DecodedFloat, FloatDomainError, FloatFormat
from src.services.dragon import dragon4

MASK64 = (1 << 64) - 1
CACHED_SIGNIFICAND_BITS = 128

# Scaled products land near 2^75, so the interval spans millions of units
# and the two-unit product error rarely matters.
_TARGET_BITS = 75


@dataclass(frozen=True)
class DiyFp:
    """A 64-bit unsigned significand f with binary exponent e: f * 2^e."""
    f: int
    e: int

    def normalized(self) -> "DiyFp":
        """Shift f left until its top (64th) bit is set."""
        if not 0 < self.f <= MASK64:
            raise ValueError(f"DiyFp significand {self.f} is not a nonzero 64-bit value")
        shift = 64 - self.f.bit_length()
        return DiyFp(self.f << shift, self.e - shift)


@dataclass(frozen=True)
class CachedPower:
    """10^decimal_exponent ~ significand * 2^binary_exponent, truncated toward zero."""
    significand: int
    binary_exponent: int
    decimal_exponent: int


@dataclass(frozen=True)
class PowerOfTenCache:
    """Contiguous table of cached powers indexed by decimal exponent."""
    entries: tuple[CachedPower, ...]

    @property
    def min_decimal_exponent(self) -> int:
        return self.entries[0].decimal_exponent

    @property
    def max_decimal_exponent(self) -> int:
        return self.entries[-1].decimal_exponent

    def __len__(self) -> int:
        return len(self.entries)

    def lookup(self, decimal_exponent: int) -> CachedPower:
        index = decimal_exponent - self.min_decimal_exponent
        if not 0 <= index < len(self.entries):
            raise KeyError(f"10^{decimal_exponent} is outside the cached range")
        return self.entries[index]


@dataclass(frozen=True)
class FastResult:
    """Fast-path output; certain=True guarantees equality with Dragon4."""
    decimal: DecimalFP
    certain: bool


def _decimal_exponent_for(e: int) -> int:
    """floor((_TARGET_BITS - 64 - e) * log10(2)), exact for |argument| <= 1650."""
    return ((_TARGET_BITS - 64 - e) * 78913) >> 18


def _cached_power(k: int) -> CachedPower:
    if k >= 0:
        power = 10 ** k
        shift = power.bit_length() - CACHED_SIGNIFICAND_BITS
        significand = power >> shift if shift >= 0 else power << -shift
        return CachedPower(significand, shift, k)
    divisor = 10 ** -k
    bits = CACHED_SIGNIFICAND_BITS - 1 + divisor.bit_length()
    return CachedPower((1 << bits) // divisor, -bits, k)


def _normalized_exponent_span(fmt: FloatFormat) -> tuple[int, int]:
    """Smallest and largest DiyFp exponents the upper midpoint can take."""
    smallest = DiyFp(4 * 1 + 2, fmt.min_p - 2).normalized().e
    largest = DiyFp(4 * (2 * fmt.hidden_bit - 1) + 2, fmt.max_p - 2).normalized().e
    return smallest, largest


def build_cache(fmt: FloatFormat = BINARY64) -> PowerOfTenCache:
    """
    Build the cached powers of ten covering every input of fmt.

    binary64 coverage also serves binary32, which is widened onto the same
    64-bit path.
    """
    smallest_e, largest_e = _normalized_exponent_span(fmt)
    low_k = _decimal_exponent_for(largest_e)
    high_k = _decimal_exponent_for(smallest_e)
    return PowerOfTenCache(tuple(_cached_power(k) for k in range(low_k, high_k + 1)))


@lru_cache(maxsize=1)
def default_cache() -> PowerOfTenCache:
    """Process-wide binary64 cache, built on first use."""
    return build_cache(BINARY64)


def _mul_shift(x: int, significand: int, shift: int) -> int:
    """floor(x * significand / 2^shift) from two 64x64 partial products."""
    low = x * (significand & MASK64)
    high = x * (significand >> 64)
    return ((low >> 64) + high) >> (shift - 64)


def _removable_digits(lo: int, hi: int) -> Optional[int]:
    """Most trailing digits removable while a multiple stays in [lo, hi]."""
    lo = max(lo, 1)
    if lo > hi:
        return None
    digits, unit = 0, 10
    while -(-lo // unit) * unit <= hi:
        digits += 1
        unit *= 10
    return digits


def fast_shortest(d: DecodedFloat, cache: PowerOfTenCache) -> FastResult:
    """
    Shortest decimal from cached-power arithmetic, with a certainty flag.

    Args:
        d: Nonzero finite float (binary32 is widened)
        cache: Powers of ten covering d's exponent range

    Returns:
        FastResult; when certain is False the decimal is only a best guess
    """
    if not d.is_finite or d.is_zero:
        raise FloatDomainError(f"Fast path needs a nonzero finite value, got {d.float_class.value}")

    interval = boundaries(d)
    upper = DiyFp(interval.high, interval.exponent).normalized()
    left = interval.exponent - upper.e
    k = _decimal_exponent_for(upper.e)
    power = cache.lookup(k)
    product_shift = -(upper.e + power.binary_exponent)

    lo = _mul_shift(interval.low << left, power.significand, product_shift)
    mid = _mul_shift(interval.value << left, power.significand, product_shift)
    hi = _mul_shift(upper.f, power.significand, product_shift)

    # True points: L in [lo, lo+2), V in [mid, mid+2), H in [hi, hi+2).
    safe_lo, safe_hi = lo + 2, hi - 1
    outer_lo, outer_hi = lo, hi + 1

    def inside_safe(t: int) -> bool:
        return safe_lo <= t <= safe_hi

    def inside_outer(t: int) -> bool:
        return outer_lo <= t <= outer_hi

    def result(t: int, removed: int, certain: bool) -> FastResult:
        decimal = DecimalFP.of(d.sign, t // 10 ** removed, removed - k).canonical()
        return FastResult(decimal=decimal, certain=certain)

    removed = _removable_digits(safe_lo, safe_hi)
    if removed is None:
        return result(mid, 0, False)

    unit = 10 ** removed
    remainder = mid % unit
    below = mid - remainder
    above = below + unit
    guess = below if inside_safe(below) else above

    outer_removed = _removable_digits(outer_lo, outer_hi)
    if outer_removed is not None and outer_removed > removed:
        return result(guess, removed, False)

    if 2 * remainder > unit:
        nearest, other = above, below
    elif 2 * remainder + 3 <= unit:
        nearest, other = below, above
    else:
        return result(guess, removed, False)

    if inside_safe(nearest):
        return result(nearest, removed, True)
    if not inside_outer(nearest) and inside_safe(other):
        return result(other, removed, True)
    return result(guess, removed, False)


def shortest(d: DecodedFloat, cache: Optional[PowerOfTenCache] = None) -> DecimalFP:
    """
    Shortest correctly rounded decimal: fast path, Dragon4 when uncertain.

    Raises:
        FloatDomainError: For infinities and NaN
    """
    if not d.is_finite:
        raise FloatDomainError(f"Cannot convert {d.float_class.value} to a decimal")
    if d.is_zero:
        return DecimalFP.zero(d.sign)
    outcome = fast_shortest(d, cache or default_cache())
    if outcome.certain:
        return outcome.decimal
    return dragon4(d)


class FastPathConverter(IShortestConverter):
    """Cached-power fast path with Dragon4 fallback."""

    name = "fastpath"

    def __init__(self, cache: Optional[PowerOfTenCache] = None):
        """
        Initialize the converter.

        Args:
            cache: Power-of-ten table (the shared default if not provided)
        """
        self._cache = cache or default_cache()

    @property
    def cache(self) -> PowerOfTenCache:
        return self._cache

    def _convert_nonzero(self, d: DecodedFloat) -> DecimalFP:
        return shortest(d, self._cache)

    def certainty(self, d: DecodedFloat) -> FastResult:
        """Raw fast-path outcome for a nonzero finite float."""
        return fast_shortest(d, self._cache)
