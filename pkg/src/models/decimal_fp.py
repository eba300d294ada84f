"""
Decimal Floating-Point Model
============================
The conversion target: (-1)^sign * w * 10^q.
Single Responsibility: Define the decimal value type only.
"""

from dataclasses import dataclass
from fractions import Fraction

from src.core.bignum import ZERO, BigUint
from src.models.ieee import Sign


@dataclass(frozen=True)
class DecimalFP:
    """Decimal significand w and exponent q with a sign."""
    sign: Sign
    w: BigUint
    q: int

    @classmethod
    def of(cls, sign: Sign, w: int, q: int) -> "DecimalFP":
        """Build from a native integer significand."""
        return cls(sign, BigUint.from_unsigned(w), q)

    @classmethod
    def zero(cls, sign: Sign = Sign.POSITIVE) -> "DecimalFP":
        return cls(sign, ZERO, 0)

    @property
    def significand(self) -> int:
        return self.w.to_int()

    @property
    def is_zero(self) -> bool:
        return self.w.is_zero

    @property
    def is_negative(self) -> bool:
        return self.sign is Sign.NEGATIVE

    @property
    def is_canonical(self) -> bool:
        if self.w.is_zero:
            return self.q == 0
        return self.w.divmod_small(10)[1] != 0

    def canonical(self) -> "DecimalFP":
        """Strip trailing decimal zeros from w, raising q to compensate."""
        if self.w.is_zero:
            return DecimalFP.zero(self.sign)
        w, q = self.w, self.q
        while True:
            quotient, remainder = w.divmod_small(10)
            if remainder:
                return DecimalFP(self.sign, w, q)
            w, q = quotient, q + 1

    def magnitude(self) -> Fraction:
        w = self.significand
        if self.q >= 0:
            return Fraction(w * 10 ** self.q)
        return Fraction(w, 10 ** -self.q)

    def __str__(self) -> str:
        return f"{self.sign.prefix}{self.significand}e{self.q}"
