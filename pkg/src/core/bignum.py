"""
Arbitrary-Precision Unsigned Integers
=====================================
Immutable little-endian limb arithmetic for Dragon4, exact decimal
expansion and the exact parser.
Single Responsibility: Only the handful of operations those algorithms need.

Limbs are 32-bit words, least significant first. The canonical form has no
trailing zero limbs, so zero is the empty tuple. Every operation returns a
fresh value.
"""

from dataclasses import dataclass
from functools import total_ordering

LIMB_BITS = 32
LIMB_BASE = 1 << LIMB_BITS
LIMB_MASK = LIMB_BASE - 1

# 5^13 is the largest power of five that fits one limb.
_POW5_STEP = 13
_POW5_LIMB = 5 ** _POW5_STEP


class BigUintUnderflowError(ArithmeticError):
    """Raised when a subtraction would go below zero."""
    pass


def _strip(limbs: list[int]) -> tuple[int, ...]:
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return tuple(limbs)


def _check_small(k: int) -> None:
    if not 0 <= k < LIMB_BASE:
        raise ValueError(f"Small operand must fit one limb, got {k}")


@total_ordering
@dataclass(frozen=True)
class BigUint:
    """Unsigned integer of unbounded size."""
    limbs: tuple[int, ...] = ()

    def __post_init__(self):
        if self.limbs and self.limbs[-1] == 0:
            raise ValueError("BigUint limbs must not end in a zero limb")

    @classmethod
    def from_unsigned(cls, v: int) -> "BigUint":
        if v < 0:
            raise ValueError(f"BigUint cannot hold negative value {v}")
        limbs = []
        while v:
            limbs.append(v & LIMB_MASK)
            v >>= LIMB_BITS
        return cls(tuple(limbs))

    def to_int(self) -> int:
        result = 0
        for limb in reversed(self.limbs):
            result = (result << LIMB_BITS) | limb
        return result

    @property
    def is_zero(self) -> bool:
        return not self.limbs

    @property
    def is_odd(self) -> bool:
        return bool(self.limbs) and bool(self.limbs[0] & 1)

    def bit_length(self) -> int:
        if not self.limbs:
            return 0
        return (len(self.limbs) - 1) * LIMB_BITS + self.limbs[-1].bit_length()

    def mul_small(self, k: int) -> "BigUint":
        _check_small(k)
        if k == 0 or not self.limbs:
            return ZERO
        out = []
        carry = 0
        for limb in self.limbs:
            carry += limb * k
            out.append(carry & LIMB_MASK)
            carry >>= LIMB_BITS
        if carry:
            out.append(carry)
        return BigUint(tuple(out))

    def shl(self, bits: int) -> "BigUint":
        if bits < 0:
            raise ValueError(f"Shift count must be non-negative, got {bits}")
        if bits == 0 or not self.limbs:
            return self
        limb_shift, bit_shift = divmod(bits, LIMB_BITS)
        out = [0] * limb_shift
        if bit_shift == 0:
            out.extend(self.limbs)
        else:
            carry = 0
            for limb in self.limbs:
                wide = (limb << bit_shift) | carry
                out.append(wide & LIMB_MASK)
                carry = wide >> LIMB_BITS
            if carry:
                out.append(carry)
        return BigUint(tuple(out))

    def mul_pow5(self, e: int) -> "BigUint":
        if e < 0:
            raise ValueError(f"Power of five must be non-negative, got {e}")
        result = self
        while e >= _POW5_STEP:
            result = result.mul_small(_POW5_LIMB)
            e -= _POW5_STEP
        if e:
            result = result.mul_small(5 ** e)
        return result

    def mul_pow10(self, e: int) -> "BigUint":
        return self.mul_pow5(e).shl(e)

    def divmod_small(self, k: int) -> tuple["BigUint", int]:
        _check_small(k)
        if k == 0:
            raise ZeroDivisionError("BigUint division by zero")
        out = [0] * len(self.limbs)
        remainder = 0
        for i in range(len(self.limbs) - 1, -1, -1):
            wide = (remainder << LIMB_BITS) | self.limbs[i]
            out[i], remainder = divmod(wide, k)
        return BigUint(_strip(out)), remainder

    def cmp(self, other: "BigUint") -> int:
        """Three-way comparison: -1, 0 or 1."""
        if len(self.limbs) != len(other.limbs):
            return -1 if len(self.limbs) < len(other.limbs) else 1
        for mine, theirs in zip(reversed(self.limbs), reversed(other.limbs)):
            if mine != theirs:
                return -1 if mine < theirs else 1
        return 0

    def add(self, other: "BigUint") -> "BigUint":
        longer, shorter = (self.limbs, other.limbs)
        if len(shorter) > len(longer):
            longer, shorter = shorter, longer
        out = []
        carry = 0
        for i, limb in enumerate(longer):
            carry += limb + (shorter[i] if i < len(shorter) else 0)
            out.append(carry & LIMB_MASK)
            carry >>= LIMB_BITS
        if carry:
            out.append(carry)
        return BigUint(tuple(out))

    def sub(self, other: "BigUint") -> "BigUint":
        if self.cmp(other) < 0:
            raise BigUintUnderflowError("BigUint subtraction underflow")
        out = []
        borrow = 0
        for i, limb in enumerate(self.limbs):
            diff = limb - borrow - (other.limbs[i] if i < len(other.limbs) else 0)
            borrow = 1 if diff < 0 else 0
            out.append(diff & LIMB_MASK)
        return BigUint(_strip(out))

    def __lt__(self, other: "BigUint") -> bool:
        return self.cmp(other) < 0

    def __repr__(self) -> str:
        return f"BigUint({self.to_int()})"


ZERO = BigUint()
ONE = BigUint((1,))


def from_unsigned(v: int) -> BigUint:
    """Module-level alias of BigUint.from_unsigned."""
    return BigUint.from_unsigned(v)
