import pytest
from hypothesis import given, settings

from src.core.ieee_codec import decode
from src.models.decimal_fp import DecimalFP
from src.models.ieee import BINARY32, BINARY64, FloatDomainError, Sign
from src.services.dragon import (
    Dragon2Converter,
    Dragon2Params,
    Dragon4Converter,
    Dragon4FastScaledConverter,
    dragon2,
    dragon2_decimal,
    dragon4,
    dragon4_fast_scaled,
    dragon4_fast_scaled_traced,
    dragon4_traced,
    estimate_scale,
)
from tests.helpers import F32_2150000128, ONE_F64, PI_F32, bits_of, decoded, nonzero_finite

WORKED_EXAMPLES = [
    (decode(PI_F32, BINARY32), 31415927, -7),
    (decode(F32_2150000128, BINARY32), 215, 7),
    (decode(1, BINARY64), 5, -324),
    (decode(ONE_F64, BINARY64), 1, 0),
    (decoded(0.3), 3, -1),
    (decoded(1e23), 1, 23),
    (decoded(5e-324 * 3), 15, -324),
]


@pytest.mark.parametrize("d, w, q", WORKED_EXAMPLES)
@pytest.mark.parametrize("convert", [dragon4, dragon4_fast_scaled])
def test_worked_examples(convert, d, w, q):
    dec = convert(d)
    assert (dec.significand, dec.q) == (w, q)


def test_sign_is_kept():
    dec = dragon4(decoded(-0.1))
    assert dec.sign is Sign.NEGATIVE and (dec.significand, dec.q) == (1, -1)


def test_largest_binary64():
    dec = dragon4(decode(0x7FEFFFFFFFFFFFFF, BINARY64))
    assert (dec.significand, dec.q) == (17976931348623157, 292)


def test_two_and_a_half_needs_two_digits():
    dec = dragon4(decoded(2.5))
    assert (dec.significand, dec.q) == (25, -1)


@given(nonzero_finite(BINARY64))
def test_fast_scaled_matches_iterative_binary64(d):
    assert dragon4_fast_scaled(d) == dragon4(d)


@given(nonzero_finite(BINARY32))
def test_fast_scaled_matches_iterative_binary32(d):
    assert dragon4_fast_scaled(d) == dragon4(d)


@given(nonzero_finite(BINARY64))
def test_output_is_canonical(d):
    assert dragon4(d).is_canonical


@pytest.mark.parametrize(
    "d, k",
    [
        (decode(ONE_F64, BINARY64), 1),
        (decoded(1e-300), -299),
        (decode(F32_2150000128, BINARY32), 10),
    ],
)
def test_estimate_scale(d, k):
    assert abs(estimate_scale(d) - k) <= 1


def test_scaling_iterations_near_1e_minus_300():
    for delta in range(-3, 4):
        d = decode(bits_of(1e-300) + delta, BINARY64)
        assert dragon4_traced(d).scale_iterations >= 299
        assert dragon4_fast_scaled_traced(d).scale_iterations <= 2
        assert dragon4_traced(d).decimal == dragon4_fast_scaled_traced(d).decimal


@pytest.mark.parametrize("convert", [dragon4, dragon4_fast_scaled, estimate_scale])
def test_zero_and_specials_rejected(convert):
    with pytest.raises(FloatDomainError):
        convert(decode(0, BINARY64))
    with pytest.raises(FloatDomainError):
        convert(decode(0x7FF8000000000000, BINARY64))


def test_dragon2_digits_and_exponent():
    digits, exponent = dragon2(decode(ONE_F64, BINARY64), Dragon2Params())
    assert (digits, exponent) == ([1], 1)
    digits, exponent = dragon2(decoded(0.5), Dragon2Params())
    assert (digits, exponent) == ([5], 0)


def test_dragon2_pi_binary32():
    dec = dragon2_decimal(decode(PI_F32, BINARY32))
    assert abs(float(dec.magnitude()) - 3.1415927) < 1e-5


def test_dragon2_other_radix():
    digits, exponent = dragon2(decoded(0.5), Dragon2Params(B=2))
    assert (digits, exponent) == ([1], 0)


@pytest.mark.parametrize("kwargs", [{"b": 1}, {"B": 1}, {"n": 0}])
def test_dragon2_params_validation(kwargs):
    with pytest.raises(ValueError):
        Dragon2Params(**kwargs)


def test_dragon2_rejects_oversized_significand():
    with pytest.raises(ValueError):
        dragon2(decode(ONE_F64, BINARY64), Dragon2Params(n=24))


@pytest.mark.parametrize("converter", [Dragon2Converter(), Dragon4Converter(), Dragon4FastScaledConverter()])
def test_converters_pass_zero_through(converter):
    assert converter.convert(decode(0x80000000, BINARY32)) == DecimalFP.zero(Sign.NEGATIVE)
    with pytest.raises(FloatDomainError):
        converter.convert(decode(0x7F800000, BINARY32))


def test_converter_names():
    assert [c.name for c in (Dragon2Converter(), Dragon4Converter(), Dragon4FastScaledConverter())] == [
        "dragon2", "dragon4", "dragon4-fast",
    ]
    assert not Dragon2Converter.exact and Dragon4Converter.exact


@settings(max_examples=50)
@given(nonzero_finite(BINARY32))
def test_dragon2_stays_close(d):
    dec = dragon2_decimal(d)
    assert dec.sign is d.sign
    assert abs(dec.magnitude() - d.magnitude()) <= d.magnitude() / 1000
