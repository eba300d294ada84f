"""
Exact Decimal Expansion
=======================
Binary -> decimal conversion with no rounding, via m * 2^p = w * 10^q,
and significant-digit accounting.
"""

from src.core.bignum import BigUint
from src.models.decimal_fp import DecimalFP
from src.models.ieee import DecodedFloat, FloatDomainError


def to_exact_decimal(d: DecodedFloat) -> DecimalFP:
    """
    Exact decimal expansion of a finite float, canonicalized.

    For p >= 0 the value is the integer m * 2^p. For p < 0 the identity
    2^p = 10^p / 5^p gives w = m * 5^-p with q = p.

    Raises:
        FloatDomainError: For infinities and NaN
    """
    if not d.is_finite:
        raise FloatDomainError(f"Cannot expand {d.float_class.value} exactly")
    if d.is_zero:
        return DecimalFP.zero(d.sign)

    m = BigUint.from_unsigned(d.m)
    if d.p >= 0:
        return DecimalFP(d.sign, m.shl(d.p), 0).canonical()
    return DecimalFP(d.sign, m.mul_pow5(-d.p), d.p).canonical()


def significant_digits(dec: DecimalFP) -> int:
    """Digits of the canonical significand; zero counts as one digit."""
    if dec.is_zero:
        return 1
    return len(str(dec.canonical().significand))
