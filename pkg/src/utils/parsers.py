"""
Literal Parsers
===============
Utilities for lexing decimal number literals.
Single Responsibility: Turn text into an exact (sign, digits, exponent) triple.
"""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from src.core.bignum import ZERO, BigUint
from src.models.ieee import Sign

_DECIMAL = re.compile(
    r"""
    (?P<sign>[+-])?
    (?:
        (?P<int>\d+)(?:\.(?P<frac>\d*))?
      | \.(?P<lead_frac>\d+)
    )
    (?:[eE](?P<exp>[+-]?\d+))?
    """,
    re.VERBOSE,
)
_SPECIAL = re.compile(r"(?P<sign>[+-])?(?P<word>inf|infinity|nan)", re.IGNORECASE)


class LiteralSyntaxError(ValueError):
    """Raised when text is not a decimal literal."""
    pass


class SpecialValue(Enum):
    INF = "inf"
    NAN = "nan"


@dataclass(frozen=True)
class ParsedNumber:
    """
    Lossless decimal literal: (-1)^sign * digits * 10^exponent.

    Every input digit is kept; no precision cap is applied.
    """
    sign: Sign
    digits: BigUint
    exponent: int
    special: Optional[SpecialValue] = None

    @property
    def is_special(self) -> bool:
        return self.special is not None


class NumberLiteralParser:
    """
    Parses decimal literals in the renderer's grammar.
    Single Responsibility: Only handles lexing, no rounding.
    """

    @staticmethod
    def parse(text: str) -> ParsedNumber:
        """
        Parse a literal such as "-1.5e+03", ".25", "12e9", "inf" or "NaN".

        Args:
            text: Literal, surrounding whitespace allowed

        Returns:
            ParsedNumber with all digits preserved

        Raises:
            LiteralSyntaxError: If text is not a decimal literal
        """
        stripped = text.strip()

        special = _SPECIAL.fullmatch(stripped)
        if special:
            sign = Sign.NEGATIVE if special.group("sign") == "-" else Sign.POSITIVE
            kind = SpecialValue.NAN if special.group("word").lower() == "nan" else SpecialValue.INF
            return ParsedNumber(sign=sign, digits=ZERO, exponent=0, special=kind)

        match = _DECIMAL.fullmatch(stripped)
        if not match:
            raise LiteralSyntaxError(f"Not a decimal literal: {text!r}")

        sign = Sign.NEGATIVE if match.group("sign") == "-" else Sign.POSITIVE
        integer_part = match.group("int") or ""
        fraction = match.group("frac") or match.group("lead_frac") or ""
        exponent = int(match.group("exp") or 0) - len(fraction)

        return ParsedNumber(
            sign=sign,
            digits=NumberLiteralParser.digits_to_biguint(integer_part + fraction),
            exponent=exponent,
        )

    @staticmethod
    def digits_to_biguint(digits: str) -> BigUint:
        """Accumulate a digit string nine digits at a time."""
        value = ZERO
        digits = digits.lstrip("0")
        head = len(digits) % 9 or 9
        start = 0
        for end in range(head, len(digits) + 1, 9):
            chunk = digits[start:end]
            value = value.mul_pow10(len(chunk)).add(BigUint.from_unsigned(int(chunk)))
            start = end
        return value
