"""
IEEE 754 Codec
==============
Bit pattern <-> (sign, m, p) decoding and round-trip interval computation.
Single Responsibility: Only field extraction, packing and midpoints.
"""

from src.models.ieee import (
    DecodedFloat,
    FloatClass,
    FloatDomainError,
    FloatFormat,
    RoundTripInterval,
    Sign,
)


class NotRepresentableError(ValueError):
    """Raised when (m, p) cannot be stored exactly in the target format."""
    pass


def decode(bits: int, fmt: FloatFormat) -> DecodedFloat:
    """
    Split a bit pattern into sign, integral significand and exponent.

    Args:
        bits: Unsigned bit pattern of fmt's width
        fmt: Target format

    Returns:
        DecodedFloat with value (-1)^sign * m * 2^p
    """
    if not 0 <= bits < (1 << fmt.total_bits):
        raise ValueError(f"Bit pattern {bits:#x} does not fit {fmt}")

    sign = Sign.NEGATIVE if bits & fmt.sign_bit else Sign.POSITIVE
    biased = (bits >> fmt.stored_significand_bits) & fmt.exponent_mask
    fraction = bits & fmt.fraction_mask

    if biased == fmt.exponent_mask:
        float_class = FloatClass.NAN if fraction else FloatClass.INFINITY
        return DecodedFloat(sign, 0, 0, float_class, fmt)
    if biased == 0:
        if fraction == 0:
            return DecodedFloat(sign, 0, 0, FloatClass.ZERO, fmt)
        return DecodedFloat(sign, fraction, fmt.min_p, FloatClass.SUBNORMAL, fmt)

    m = fraction | fmt.hidden_bit
    p = biased - fmt.bias - fmt.stored_significand_bits
    return DecodedFloat(sign, m, p, FloatClass.NORMAL, fmt)


def encode(d: DecodedFloat) -> int:
    """
    Pack a decoded float back into its bit pattern.

    Accepts any (m, p) pair that names a representable value, normalizing
    it first (so m=3, p=2 packs as 12.0). NaN packs as the quiet NaN.

    Raises:
        NotRepresentableError: If the value needs more precision or range
    """
    fmt = d.format
    sign_bits = fmt.sign_bit if d.is_negative else 0

    if d.float_class is FloatClass.NAN:
        return sign_bits | fmt.quiet_nan_bits
    if d.float_class is FloatClass.INFINITY:
        return sign_bits | fmt.infinity_bits

    m, p = d.m, d.p
    if m < 0:
        raise NotRepresentableError(f"Negative significand {m}")
    if m == 0:
        return sign_bits

    # Bring m into [hidden, 2*hidden) where possible, dropping only zero bits.
    excess = m.bit_length() - fmt.precision
    if excess > 0:
        if m & ((1 << excess) - 1):
            raise NotRepresentableError(f"{m} needs more than {fmt.precision} bits")
        m >>= excess
        p += excess
    elif excess < 0:
        room = min(-excess, p - fmt.min_p)
        if room > 0:
            m <<= room
            p -= room
    if p < fmt.min_p:
        drop = fmt.min_p - p
        if m & ((1 << drop) - 1):
            raise NotRepresentableError(f"{d.m} * 2^{d.p} is below the subnormal grid")
        m >>= drop
        p = fmt.min_p

    if m >= fmt.hidden_bit:
        biased = p - fmt.min_p + 1
        if biased > fmt.max_biased_exponent:
            raise NotRepresentableError(f"{d.m} * 2^{d.p} overflows {fmt}")
        return sign_bits | (biased << fmt.stored_significand_bits) | (m - fmt.hidden_bit)
    return sign_bits | m


def boundaries(d: DecodedFloat) -> RoundTripInterval:
    """
    Midpoints to the neighbouring floats of a nonzero finite value.

    The lower gap halves when m is the first significand of a binade above
    the minimum exponent, since the float below uses the finer spacing.
    """
    if d.float_class not in (FloatClass.NORMAL, FloatClass.SUBNORMAL):
        raise FloatDomainError(f"No round-trip interval for {d.float_class.value}")

    fmt = d.format
    value = 4 * d.m
    asymmetric = d.m == fmt.hidden_bit and d.p > fmt.min_p
    low = value - 1 if asymmetric else value - 2
    even = d.m % 2 == 0
    return RoundTripInterval(
        low=low,
        value=value,
        high=value + 2,
        exponent=d.p - 2,
        low_inclusive=even,
        high_inclusive=even,
    )