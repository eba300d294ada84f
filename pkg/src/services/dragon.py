"""
Dragon Converters
=================
The Steele-White family of free-format printers:

- dragon2: digit generation on the format's own native floats (inexact).
- dragon4: exact generation over BigUint with the iterative scaling loop.
- dragon4_fast_scaled: dragon4 seeded by a floating-point scale estimate
  (Gay's dtoa), corrected by at most one step.

All three take nonzero finite DecodedFloat values; zeros, signs and specials
are handled by the converter wrappers at the bottom of the module.
"""

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from src.core.bignum import BigUint
from src.core.ieee_codec import boundaries
from src.interfaces.converter import IShortestConverter
from src.models.decimal_fp import DecimalFP
from src.models.ieee import DecodedFloat, FloatDomainError, FloatWidth, Sign

# Tangent of log10(x) at x = 1.5 plus log10(2), as used by dtoa.
_GAY_SLOPE = 0.289529654602168
_GAY_INTERCEPT = 0.1760912590558
_LOG10_2 = 0.301029995663981

# Dragon2 emits at most this many digits when its approximate state stalls.
_DRAGON2_MAX_DIGITS = 40


@dataclass(frozen=True)
class Dragon2Params:
    """Input radix b, output radix B and input precision n (radix-b digits)."""
    b: int = 2
    B: int = 10
    n: int = 53

    def __post_init__(self):
        if self.b < 2 or self.B < 2:
            raise ValueError(f"Radices must be at least 2, got b={self.b}, B={self.B}")
        if self.n < 1:
            raise ValueError(f"Precision must be positive, got n={self.n}")

    @classmethod
    def for_float(cls, d: DecodedFloat, output_radix: int = 10) -> "Dragon2Params":
        return cls(b=2, B=output_radix, n=d.format.precision)


@dataclass
class ScaledFraction:
    """
    Dragon4 state: value = R/S * 10^k, half-gaps Mplus/S above, Mminus/S below.
    """
    R: BigUint
    S: BigUint
    Mplus: BigUint
    Mminus: BigUint
    k: int = 0


@dataclass(frozen=True)
class Dragon4Trace:
    """A Dragon4 result together with the number of scaling steps it took."""
    decimal: DecimalFP
    scale_iterations: int


@dataclass
class _ScaleCounter:
    iterations: int = field(default=0)


def _require_nonzero_finite(d: DecodedFloat) -> None:
    if not d.is_finite or d.is_zero:
        raise FloatDomainError(f"Dragon conversion needs a nonzero finite value, got {d.float_class.value}")


# ---------------------------------------------------------------------------
# Dragon2
# ---------------------------------------------------------------------------

def _propagate_carry(digits: list[int], radix: int, exponent: int) -> tuple[list[int], int]:
    i = len(digits) - 1
    while i >= 0 and digits[i] >= radix:
        digits[i] -= radix
        if i == 0:
            digits.insert(0, 1)
            exponent += 1
            break
        digits[i - 1] += 1
        i -= 1
    while len(digits) > 1 and digits[-1] == 0:
        digits.pop()
    return digits, exponent


def dragon2(d: DecodedFloat, params: Dragon2Params) -> tuple[list[int], int]:
    """
    Free-format digits of |d| computed with native limited-precision floats.

    The state lives in the float's own width (float32 arithmetic for
    binary32). The value is approximately 0.d1 d2 ... * B^exponent. Output
    may fail to round-trip.

    Returns:
        (digits, exponent) with digits in radix params.B
    """
    _require_nonzero_finite(d)
    if params.b != 2:
        raise ValueError("Decoded floats are radix 2; Dragon2Params.b must be 2")
    if d.m >= params.b ** params.n:
        raise ValueError(f"Significand {d.m} exceeds {params.n} radix-{params.b} digits")

    native = np.float32 if d.format.width is FloatWidth.BINARY32 else np.float64
    radix = native(params.B)
    one = native(1)
    half = native(0.5)

    with np.errstate(over="ignore", under="ignore"):
        R = native(np.ldexp(native(d.m), d.p))
        M = native(np.ldexp(one, d.p - 1))

        exponent = 0
        while R >= one:
            R = R / radix
            M = M / radix
            exponent += 1
        while R * radix < one:
            R = R * radix
            M = M * radix
            exponent -= 1

        digits: list[int] = []
        while True:
            scaled = R * radix
            U = min(int(np.floor(scaled)), params.B - 1)
            R = scaled - native(U)
            M = M * radix
            low = R < M or R == 0
            high = R > one - M
            if low or high or len(digits) + 1 >= _DRAGON2_MAX_DIGITS:
                break
            digits.append(U)

        if low and not high:
            digits.append(U)
        elif high and not low:
            digits.append(U + 1)
        else:
            digits.append(U if R <= half else U + 1)

    return _propagate_carry(digits, params.B, exponent)


# ---------------------------------------------------------------------------
# Dragon4
# ---------------------------------------------------------------------------

def _initial_state(d: DecodedFloat) -> ScaledFraction:
    """R/S = m * 2^p with Mplus/Mminus the gaps to the neighbouring midpoints."""
    fmt = d.format
    m = BigUint.from_unsigned(d.m)
    asymmetric = d.m == fmt.hidden_bit and d.p > fmt.min_p
    one = BigUint.from_unsigned(1)

    if d.p >= 0:
        ulp = one.shl(d.p)
        if asymmetric:
            return ScaledFraction(
                R=m.shl(d.p + 2), S=BigUint.from_unsigned(4),
                Mplus=ulp.shl(1), Mminus=ulp,
            )
        return ScaledFraction(R=m.shl(d.p + 1), S=BigUint.from_unsigned(2), Mplus=ulp, Mminus=ulp)

    if asymmetric:
        return ScaledFraction(
            R=m.shl(2), S=one.shl(2 - d.p),
            Mplus=BigUint.from_unsigned(2), Mminus=one,
        )
    return ScaledFraction(R=m.shl(1), S=one.shl(1 - d.p), Mplus=one, Mminus=one)


def _reaches_high(R: BigUint, S: BigUint, Mplus: BigUint, high_ok: bool) -> bool:
    """True when the upper boundary R + Mplus is (or may be) at or above S."""
    order = R.add(Mplus).cmp(S)
    return order >= 0 if high_ok else order > 0


def _scale_iteratively(state: ScaledFraction, high_ok: bool, counter: _ScaleCounter) -> ScaledFraction:
    R, S, Mplus, Mminus, k = state.R, state.S, state.Mplus, state.Mminus, state.k
    while True:
        if _reaches_high(R, S, Mplus, high_ok):
            S = S.mul_small(10)
            k += 1
        else:
            R10, Mplus10 = R.mul_small(10), Mplus.mul_small(10)
            if _reaches_high(R10, S, Mplus10, high_ok):
                break
            R, Mplus, Mminus = R10, Mplus10, Mminus.mul_small(10)
            k -= 1
        counter.iterations += 1
    return ScaledFraction(R, S, Mplus, Mminus, k)


def _scale_from_estimate(state: ScaledFraction, k_hat: int, high_ok: bool, counter: _ScaleCounter) -> ScaledFraction:
    R, S, Mplus, Mminus = state.R, state.S, state.Mplus, state.Mminus
    if k_hat >= 0:
        S = S.mul_pow10(k_hat)
    else:
        R, Mplus, Mminus = R.mul_pow10(-k_hat), Mplus.mul_pow10(-k_hat), Mminus.mul_pow10(-k_hat)
    counter.iterations += 1

    k = k_hat
    if _reaches_high(R, S, Mplus, high_ok):
        S = S.mul_small(10)
        k += 1
        counter.iterations += 1
    else:
        R10, Mplus10 = R.mul_small(10), Mplus.mul_small(10)
        if not _reaches_high(R10, S, Mplus10, high_ok):
            R, Mplus, Mminus = R10, Mplus10, Mminus.mul_small(10)
            k -= 1
            counter.iterations += 1
    return ScaledFraction(R, S, Mplus, Mminus, k)


def _quotient_digit(R: BigUint, S: BigUint) -> tuple[int, BigUint]:
    digit = 0
    while R.cmp(S) >= 0:
        R = R.sub(S)
        digit += 1
    return digit, R


def _generate_digits(state: ScaledFraction, low_ok: bool, high_ok: bool, sign: Sign) -> DecimalFP:
    """
    Emit digits until the remainder falls inside the round-trip interval.

    When both ends qualify, the closer candidate wins and an exact tie goes
    to the even digit.
    """
    R, S, Mplus, Mminus = state.R, state.S, state.Mplus, state.Mminus
    w = 0
    count = 0
    while True:
        R, Mplus, Mminus = R.mul_small(10), Mplus.mul_small(10), Mminus.mul_small(10)
        digit, R = _quotient_digit(R, S)
        count += 1
        order_low = R.cmp(Mminus)
        tc_low = order_low <= 0 if low_ok else order_low < 0
        tc_high = _reaches_high(R, S, Mplus, high_ok)
        if not tc_low and not tc_high:
            w = w * 10 + digit
            continue
        if tc_low and tc_high:
            twice = R.shl(1).cmp(S)
            if twice > 0 or (twice == 0 and digit % 2 == 1):
                digit += 1
        elif tc_high:
            digit += 1
        w = w * 10 + digit
        break
    return DecimalFP.of(sign, w, state.k - count).canonical()


def _dragon4_core(d: DecodedFloat, scale: Callable[[ScaledFraction, bool, _ScaleCounter], ScaledFraction]) -> Dragon4Trace:
    _require_nonzero_finite(d)
    interval = boundaries(d)
    counter = _ScaleCounter()
    state = scale(_initial_state(d), interval.high_inclusive, counter)
    decimal = _generate_digits(state, interval.low_inclusive, interval.high_inclusive, d.sign)
    return Dragon4Trace(decimal=decimal, scale_iterations=counter.iterations)


def dragon4_traced(d: DecodedFloat) -> Dragon4Trace:
    """Dragon4 with its scaling-loop iteration count."""
    return _dragon4_core(d, _scale_iteratively)


def dragon4(d: DecodedFloat) -> DecimalFP:
    """
    Shortest, correctly rounded decimal for a nonzero finite float.

    Exact big-integer arithmetic throughout; the decimal scale k is found
    by multiplying by ten one step at a time.
    """
    return dragon4_traced(d).decimal


def estimate_scale(d: DecodedFloat) -> int:
    """
    Floating-point estimate of the Dragon4 scale k, within one of the truth.

    |d| is written 1.x * 2^e and log10 approximated by the tangent at 1.5.
    """
    _require_nonzero_finite(d)
    top = d.m.bit_length() - 1
    x = d.m / float(1 << top)
    e = top + d.p
    log10_estimate = (x - 1.5) * _GAY_SLOPE + _GAY_INTERCEPT + e * _LOG10_2
    return math.floor(log10_estimate) + 1


def dragon4_fast_scaled_traced(d: DecodedFloat) -> Dragon4Trace:
    """dragon4_fast_scaled with its scaling step count (at most two)."""
    k_hat = estimate_scale(d)
    return _dragon4_core(
        d, lambda state, high_ok, counter: _scale_from_estimate(state, k_hat, high_ok, counter)
    )


def dragon4_fast_scaled(d: DecodedFloat) -> DecimalFP:
    """Dragon4 with the scale seeded by estimate_scale; same output contract."""
    return dragon4_fast_scaled_traced(d).decimal


def dragon2_decimal(d: DecodedFloat) -> DecimalFP:
    """Dragon2 digits in radix ten packed as a DecimalFP."""
    digits, exponent = dragon2(d, Dragon2Params.for_float(d))
    w = 0
    for digit in digits:
        w = w * 10 + digit
    return DecimalFP.of(d.sign, w, exponent - len(digits)).canonical()


# ---------------------------------------------------------------------------
# Converter services
# ---------------------------------------------------------------------------

class Dragon2Converter(IShortestConverter):
    """Approximate Steele-White printer; not guaranteed to round-trip."""

    name = "dragon2"
    exact = False

    def _convert_nonzero(self, d: DecodedFloat) -> DecimalFP:
        return dragon2_decimal(d)


class Dragon4Converter(IShortestConverter):
    """Exact Steele-White printer with iterative scaling."""

    name = "dragon4"

    def _convert_nonzero(self, d: DecodedFloat) -> DecimalFP:
        return dragon4(d)


class Dragon4FastScaledConverter(IShortestConverter):
    """Dragon4 accelerated by a floating-point scale estimate."""

    name = "dragon4-fast"

    def _convert_nonzero(self, d: DecodedFloat) -> DecimalFP:
        return dragon4_fast_scaled(d)


__all__ = [
    "Dragon2Params",
    "ScaledFraction",
    "Dragon4Trace",
    "dragon2",
    "dragon2_decimal",
    "dragon4",
    "dragon4_traced",
    "estimate_scale",
    "dragon4_fast_scaled",
    "dragon4_fast_scaled_traced",
    "Dragon2Converter",
    "Dragon4Converter",
    "Dragon4FastScaledConverter",
]
