"""Bit-pattern helpers and hypothesis strategies shared by the test modules."""

import numpy as np
from hypothesis import strategies as st

from src.core.ieee_codec import decode
from src.models.ieee import BINARY32, BINARY64, DecodedFloat, FloatFormat

PI_F32 = 0x40490FDB
F32_2150000128 = 0x4F002666
F32_4278190080 = 0x4F7F0000
ONE_F64 = 0x3FF0000000000000


def bits_of(value: float, fmt: FloatFormat = BINARY64) -> int:
    """Bit pattern of a Python float, narrowed to binary32 when asked."""
    if fmt is BINARY32:
        return int(np.float32(value).view(np.uint32))
    return int(np.float64(value).view(np.uint64))


def decoded(value: float, fmt: FloatFormat = BINARY64) -> DecodedFloat:
    return decode(bits_of(value, fmt), fmt)


def finite_patterns(fmt: FloatFormat, nonzero: bool = False) -> st.SearchStrategy[int]:
    """Uniform bit patterns of finite values (optionally nonzero)."""
    exponent_field = fmt.exponent_mask << fmt.stored_significand_bits

    def keep(bits: int) -> bool:
        if bits & exponent_field == exponent_field:
            return False
        return not nonzero or bits & ~fmt.sign_bit != 0

    return st.integers(min_value=0, max_value=(1 << fmt.total_bits) - 1).filter(keep)


def nonzero_finite(fmt: FloatFormat) -> st.SearchStrategy[DecodedFloat]:
    return finite_patterns(fmt, nonzero=True).map(lambda bits: decode(bits, fmt))
