"""
Round-Trip Oracle
=================
Exact and deliberately slow reference machinery used to validate converters.

- parse_exact: correctly rounded decimal -> binary with round-half-even,
  decided by big-integer comparisons only.
- minimal_digit_count / grid_candidates: intersect the round-trip interval
  with k-digit decimal grids.
- shortest_string_oracle: exhaustive search for the shortest printable string.
"""

import math
from fractions import Fraction
from typing import Optional

from src.core.bignum import ONE, BigUint
from src.core.ieee_codec import boundaries
from src.models.decimal_fp import DecimalFP
from src.models.ieee import DecodedFloat, FloatDomainError, FloatFormat, Sign
from src.services.renderer import RenderedString, minimal_forms
from src.utils.parsers import LiteralSyntaxError, NumberLiteralParser, SpecialValue


# ---------------------------------------------------------------------------
# Decimal -> binary
# ---------------------------------------------------------------------------

def _pow10(e: int) -> BigUint:
    return ONE.mul_pow10(e)


def _at_least_power_of_two(num: BigUint, den: BigUint, e: int) -> bool:
    """num/den >= 2^e."""
    if e >= 0:
        return num.cmp(den.shl(e)) >= 0
    return num.shl(-e).cmp(den) >= 0


def _binary_exponent(num: BigUint, den: BigUint) -> int:
    """floor(log2(num/den)) for a positive ratio."""
    e = num.bit_length() - den.bit_length()
    return e if _at_least_power_of_two(num, den, e) else e - 1


def _long_divide(dividend: BigUint, divisor: BigUint, bits: int) -> tuple[int, BigUint]:
    """Restoring division for a quotient known to fit in `bits` bits."""
    quotient = 0
    for bit in range(bits - 1, -1, -1):
        shifted = divisor.shl(bit)
        if dividend.cmp(shifted) >= 0:
            dividend = dividend.sub(shifted)
            quotient |= 1 << bit
    return quotient, dividend


def _round_to_format(num: BigUint, den: BigUint, fmt: FloatFormat) -> tuple[int, int]:
    """
    Nearest (m, p) to num/den on fmt's grid, ties to even m.

    Returns p > fmt.max_p when the value overflows.
    """
    e = _binary_exponent(num, den)
    p = max(e - (fmt.precision - 1), fmt.min_p)
    if p >= 0:
        dividend, divisor = num, den.shl(p)
    else:
        dividend, divisor = num.shl(-p), den

    m, remainder = _long_divide(dividend, divisor, fmt.precision + 1)
    order = remainder.shl(1).cmp(divisor)
    if order > 0 or (order == 0 and m % 2 == 1):
        m += 1
    if m == 2 * fmt.hidden_bit:
        m >>= 1
        p += 1
    return m, p


def parse_exact(text: str, fmt: FloatFormat) -> int:
    """
    Correctly rounded bit pattern for a decimal literal.

    The exact decimal digits * 10^exponent is compared against candidate
    m * 2^p in big-integer arithmetic; halfway cases resolve to even m.

    Args:
        text: Literal in the renderer grammar ('+' and 'E' also accepted)
        fmt: Target format

    Returns:
        Unsigned bit pattern; overflow yields the infinity pattern

    Raises:
        LiteralSyntaxError: If text is malformed
    """
    parsed = NumberLiteralParser.parse(text)
    sign_bits = fmt.sign_bit if parsed.sign is Sign.NEGATIVE else 0

    if parsed.special is SpecialValue.NAN:
        return sign_bits | fmt.quiet_nan_bits
    if parsed.special is SpecialValue.INF:
        return sign_bits | fmt.infinity_bits
    if parsed.digits.is_zero:
        return sign_bits

    digit_count = len(str(parsed.digits.to_int()))
    if parsed.exponent + digit_count - 1 > fmt.max_decimal_exponent:
        return sign_bits | fmt.infinity_bits
    if parsed.exponent + digit_count <= fmt.underflow_decimal_exponent:
        return sign_bits

    if parsed.exponent >= 0:
        num, den = parsed.digits.mul_pow10(parsed.exponent), ONE
    else:
        num, den = parsed.digits, _pow10(-parsed.exponent)

    m, p = _round_to_format(num, den, fmt)
    if m == 0:
        return sign_bits
    if p > fmt.max_p:
        return sign_bits | fmt.infinity_bits
    if m < fmt.hidden_bit:
        return sign_bits | m
    biased = p - fmt.min_p + 1
    return sign_bits | (biased << fmt.stored_significand_bits) | (m - fmt.hidden_bit)


# ---------------------------------------------------------------------------
# k-digit grids
# ---------------------------------------------------------------------------

def _floor_log10(x: Fraction) -> int:
    e = len(str(x.numerator)) - len(str(x.denominator))
    while x >= Fraction(10) ** (e + 1):
        e += 1
    while x < Fraction(10) ** e:
        e -= 1
    return e


def _require_nonzero_finite(d: DecodedFloat) -> None:
    if not d.is_finite or d.is_zero:
        raise FloatDomainError(f"Oracle needs a nonzero finite value, got {d.float_class.value}")


def _grid_bands(d: DecodedFloat, k: int) -> list[tuple[int, int, int]]:
    """
    (q, first, last) for every exponent whose k-digit grid meets the interval.

    Each band holds the k-digit w in [first, last] with w * 10^q inside d's
    round-trip interval; bands come in ascending q.
    """
    interval = boundaries(d)
    lower, upper = interval.lower, interval.upper
    smallest_w, largest_w = 10 ** (k - 1), 10 ** k - 1

    bands: list[tuple[int, int, int]] = []
    for q in sorted({_floor_log10(lower) - (k - 1), _floor_log10(upper) - (k - 1)}):
        scale = Fraction(10) ** q
        low_w = lower / scale
        high_w = upper / scale

        first = math.ceil(low_w)
        if first == low_w and not interval.low_inclusive:
            first += 1
        last = math.floor(high_w)
        if last == high_w and not interval.high_inclusive:
            last -= 1

        first, last = max(first, smallest_w), min(last, largest_w)
        if first <= last:
            bands.append((q, first, last))
    return bands


def grid_candidates(d: DecodedFloat, k: int) -> list[DecimalFP]:
    """
    Every k-digit w with w * 10^q inside d's round-trip interval.

    Candidates are returned in ascending order, signed like d and not
    canonicalized (w always has exactly k digits). Near the bottom of the
    subnormal range the list grows tenfold per digit.
    """
    _require_nonzero_finite(d)
    return [
        DecimalFP.of(d.sign, w, q)
        for q, first, last in _grid_bands(d, k)
        for w in range(first, last + 1)
    ]


def minimal_digit_count(d: DecodedFloat) -> int:
    """Smallest k for which some k-digit decimal parses back to d."""
    _require_nonzero_finite(d)
    for k in range(1, d.format.max_exact_digits + 1):
        if _grid_bands(d, k):
            return k
    raise AssertionError(f"No round-tripping decimal within {d.format.max_exact_digits} digits")


def _nearest_multiples(first: int, last: int, step: int, target: Fraction) -> list[int]:
    """
    Multiples of step in [first, last] that are not multiples of 10 * step,
    nearest to target from below and from above.
    """
    found: list[int] = []
    below = min(last, math.floor(target)) // step * step
    if below % (10 * step) == 0:
        below -= step
    if below >= first:
        found.append(below)

    above = -(-max(first, math.ceil(target)) // step) * step
    if above % (10 * step) == 0:
        above += step
    if above <= last and above not in found:
        found.append(above)
    return found


def closest_minimal_candidate(d: DecodedFloat, k: Optional[int] = None) -> DecimalFP:
    """
    Correctly rounded shortest decimal by grid search.

    Among minimal-length candidates the one nearest d wins; an exact tie
    goes to the even significand.

    Args:
        d: Nonzero finite float
        k: Its minimal digit count, when the caller already has it
    """
    _require_nonzero_finite(d)
    target = d.magnitude()
    candidates: list[DecimalFP] = []
    for q, first, last in _grid_bands(d, k or minimal_digit_count(d)):
        scaled = target / Fraction(10) ** q
        nearest = {min(max(w, first), last) for w in (math.floor(scaled), math.ceil(scaled))}
        candidates.extend(DecimalFP.of(d.sign, w, q) for w in nearest)
    best = min(candidates, key=lambda c: (abs(c.magnitude() - target), c.significand % 2))
    return best.canonical()


def shortest_string_oracle(d: DecodedFloat) -> RenderedString:
    """
    Minimum-length string that parses back to d, by exhaustive grid search.

    Every k-digit band for every k up to max_exact_digits is split by its
    count of trailing zeros; all members of one split share a text length,
    so only the ones nearest d are rendered, in every MinimalLength
    sub-form. Ties prefer fixed notation, then the closest value, then
    text order.
    """
    if not d.is_finite:
        raise FloatDomainError(f"Cannot print {d.float_class.value} as a decimal string")
    if d.is_zero:
        return RenderedString.of(d.sign.prefix + "0")

    target = d.magnitude()
    ranked: list[tuple[int, bool, Fraction, str]] = []
    for k in range(1, d.format.max_exact_digits + 1):
        for q, first, last in _grid_bands(d, k):
            scale = Fraction(10) ** q
            for zeros in range(k):
                step = 10 ** zeros
                for w in _nearest_multiples(first, last, step, target / scale):
                    distance = abs(w * scale - target)
                    for form in minimal_forms(str(w // step), q + zeros):
                        ranked.append((len(form.text), not form.fixed, distance, form.text))

    best = min(ranked)
    return RenderedString.of(d.sign.prefix + best[3])


__all__ = [
    "LiteralSyntaxError",
    "parse_exact",
    "grid_candidates",
    "minimal_digit_count",
    "closest_minimal_candidate",
    "shortest_string_oracle",
]
