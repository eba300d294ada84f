"""
Decimal Renderer
================
Single Responsibility: Turn DecimalFP values into character strings.

Three policies are supported:

- CStyle: shorter of fixed and d.ddde+XX (two-digit signed exponent), fixed on ties.
- MinimalLength: the globally shortest of fixed, point-scientific and
  integer-scientific forms; no '+' and no exponent padding.
- ScientificAlways: d.dddE-X, always scientific.
"""

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Optional

from src.core.bignum import BigUint
from src.core.exact_decimal import to_exact_decimal
from src.core.ieee_codec import boundaries
from src.interfaces.converter import IShortestConverter
from src.models.decimal_fp import DecimalFP
from src.models.ieee import DecodedFloat, FloatClass, FloatDomainError
from src.services.dragon import dragon4

_DIGIT_PAIRS = tuple(f"{i:02d}" for i in range(100))


class UnknownPolicyError(KeyError):
    """Raised when a policy name matches no RenderPolicy."""
    pass


class RenderPolicy(Enum):
    """Formatting policy; values are the CLI spellings."""
    C_STYLE = "c"
    MINIMAL = "minimal"
    SCIENTIFIC = "sci"

    @classmethod
    def from_name(cls, name: str) -> "RenderPolicy":
        key = name.strip().lower()
        for policy in cls:
            if key in (policy.value, policy.name.lower()):
                return policy
        raise UnknownPolicyError(f"Unknown render policy: {name!r} (expected c, minimal or sci)")


@dataclass(frozen=True)
class RenderedString:
    """Rendered text and its character count."""
    text: str
    length: int

    @classmethod
    def of(cls, text: str) -> "RenderedString":
        return cls(text=text, length=len(text))

    def __post_init__(self):
        if self.length != len(self.text):
            raise ValueError(f"Length {self.length} does not match {self.text!r}")

    def __str__(self) -> str:
        return self.text


@dataclass(frozen=True)
class _Form:
    text: str
    fixed: bool


def digits_to_chars(w: BigUint) -> str:
    """
    Decimal digits of w, two per step via the pair table.

    Examples:
        >>> digits_to_chars(BigUint.from_unsigned(10))
        '10'
    """
    if w.is_zero:
        return "0"
    chunks: list[str] = []
    while not w.is_zero:
        w, pair = w.divmod_small(100)
        chunks.append(_DIGIT_PAIRS[pair])
    text = "".join(reversed(chunks))
    return text[1:] if text[0] == "0" else text


# ---------------------------------------------------------------------------
# Sub-forms (unsigned)
# ---------------------------------------------------------------------------

def fixed_form(digits: str, q: int) -> str:
    if q >= 0:
        return digits + "0" * q
    point = len(digits) + q
    if point > 0:
        return f"{digits[:point]}.{digits[point:]}"
    return "0." + "0" * -point + digits


def _leading_point(digits: str) -> str:
    return digits if len(digits) == 1 else f"{digits[0]}.{digits[1:]}"


def scientific_form(digits: str, q: int, policy: RenderPolicy) -> str:
    """d.ddd with an exponent marker in the policy's grammar."""
    exponent = len(digits) - 1 + q
    mantissa = _leading_point(digits)
    if policy is RenderPolicy.C_STYLE:
        sign = "-" if exponent < 0 else "+"
        return f"{mantissa}e{sign}{abs(exponent):02d}"
    if policy is RenderPolicy.SCIENTIFIC:
        return f"{mantissa}E{exponent}"
    return f"{mantissa}e{exponent}"


def minimal_forms(digits: str, q: int) -> list[_Form]:
    """Every MinimalLength sub-form of digits * 10^q."""
    exponent = len(digits) - 1 + q
    forms = [_Form(fixed_form(digits, q), fixed=True)]
    if exponent != 0:
        forms.append(_Form(scientific_form(digits, q, RenderPolicy.MINIMAL), fixed=False))
    # Integer-scientific must write a shorter exponent than point-scientific.
    if q > 0 and len(str(q)) < len(str(exponent)):
        forms.append(_Form(f"{digits}e{q}", fixed=False))
    return forms


def _shortest_form(forms: list[_Form]) -> _Form:
    return min(forms, key=lambda form: (len(form.text), not form.fixed, form.text))


# ---------------------------------------------------------------------------
# Public rendering
# ---------------------------------------------------------------------------

def render(dec: DecimalFP, policy: RenderPolicy, exact: Optional[DecimalFP] = None) -> RenderedString:
    """
    Render a decimal under a policy.

    Args:
        dec: Decimal to print (canonicalized here if it is not already)
        policy: Output grammar
        exact: Exact expansion of the source float; lets CStyle print the
            numerically closest integer when fixed notation pads with zeros

    Returns:
        RenderedString in the policy's grammar
    """
    prefix = dec.sign.prefix
    if dec.is_zero:
        return RenderedString.of(prefix + "0")

    dec = dec.canonical()
    digits = digits_to_chars(dec.w)

    if policy is RenderPolicy.SCIENTIFIC:
        return RenderedString.of(prefix + scientific_form(digits, dec.q, policy))

    if policy is RenderPolicy.MINIMAL:
        return RenderedString.of(prefix + _shortest_form(minimal_forms(digits, dec.q)).text)

    fixed = fixed_form(digits, dec.q)
    scientific = scientific_form(digits, dec.q, policy)
    if len(scientific) < len(fixed):
        return RenderedString.of(prefix + scientific)
    if dec.q > 0 and exact is not None and not exact.is_zero:
        exact = exact.canonical()
        if exact.q >= 0:
            exact_text = fixed_form(digits_to_chars(exact.w), exact.q)
            if len(exact_text) <= len(fixed):
                fixed = exact_text
    return RenderedString.of(prefix + fixed)


def render_special(d: DecodedFloat) -> RenderedString:
    """Text for infinities and NaN."""
    if d.float_class is FloatClass.NAN:
        return RenderedString.of("nan")
    if d.float_class is FloatClass.INFINITY:
        return RenderedString.of(d.sign.prefix + "inf")
    raise FloatDomainError(f"{d.float_class.value} is not a special value")


def format_float(d: DecodedFloat, policy: RenderPolicy, converter: IShortestConverter) -> RenderedString:
    """Decode-to-text pipeline: specials, then convert and render."""
    if not d.is_finite:
        return render_special(d)
    exact = None if d.is_zero else to_exact_decimal(d)
    return render(converter.convert(d), policy, exact=exact)


def _nearest_free_of_trailing_zero(low: int, high: int, target: Fraction) -> list[int]:
    """Integers in [low, high] not divisible by 10, nearest target from each side."""
    found: list[int] = []
    below = min(high, math.floor(target))
    if below % 10 == 0:
        below -= 1
    if below >= low:
        found.append(below)
    above = max(low, math.ceil(target))
    if above % 10 == 0:
        above += 1
    if above <= high and above not in found:
        found.append(above)
    return found


def to_shortest_string(d: DecodedFloat) -> RenderedString:
    """
    Minimum-length string that parses back to d.

    Walks decimal positions from just above Dragon4's leading digit down
    to max_exact_digits below it. At each position the interval holds a
    run of integers c, read as c * 10^position; for every digit count in
    that run the members without a trailing zero nearest d compete in all
    MinimalLength sub-forms. Ties prefer fixed notation, then the
    numerically closest value, then text order.

    Raises:
        FloatDomainError: For infinities and NaN
    """
    if not d.is_finite:
        raise FloatDomainError(f"Cannot print {d.float_class.value} as a decimal string")
    if d.is_zero:
        return RenderedString.of(d.sign.prefix + "0")

    interval = boundaries(d)
    lower, upper = interval.lower, interval.upper
    target: Fraction = interval.center
    max_digits = d.format.max_exact_digits
    leading = dragon4(d)
    top = len(str(leading.significand)) + leading.q

    ranked: list[tuple[int, bool, Fraction, str]] = []
    for position in range(top, top - max_digits - 2, -1):
        unit = Fraction(10) ** position
        low_c, high_c = lower / unit, upper / unit
        first = math.ceil(low_c)
        if first == low_c and not interval.low_inclusive:
            first += 1
        last = math.floor(high_c)
        if last == high_c and not interval.high_inclusive:
            last -= 1
        if first > last:
            continue

        for count in range(len(str(first)), min(len(str(last)), max_digits) + 1):
            band_low = max(first, 10 ** (count - 1))
            band_high = min(last, 10 ** count - 1)
            for c in _nearest_free_of_trailing_zero(band_low, band_high, target / unit):
                distance = abs(c * unit - target)
                for form in minimal_forms(str(c), position):
                    ranked.append((len(form.text), not form.fixed, distance, form.text))

    best = min(ranked)
    return RenderedString.of(d.sign.prefix + best[3])


__all__ = [
    "RenderPolicy",
    "RenderedString",
    "UnknownPolicyError",
    "digits_to_chars",
    "fixed_form",
    "scientific_form",
    "minimal_forms",
    "render",
    "render_special",
    "format_float",
    "to_shortest_string",
]
