import pytest
from hypothesis import given
from hypothesis.strategies import integers

from src.core.bignum import BigUint
from src.core.ieee_codec import decode
from src.models.decimal_fp import DecimalFP
from src.models.ieee import BINARY32, BINARY64, FloatDomainError, Sign
from src.services.dragon import Dragon4Converter
from src.services.fastpath import FastPathConverter
from src.services.renderer import (
    RenderedString,
    RenderPolicy,
    UnknownPolicyError,
    digits_to_chars,
    fixed_form,
    format_float,
    render,
    to_shortest_string,
)
from tests.helpers import F32_2150000128, F32_4278190080, PI_F32, decoded

C, MIN, SCI = RenderPolicy.C_STYLE, RenderPolicy.MINIMAL, RenderPolicy.SCIENTIFIC


def dec(w: int, q: int, sign: Sign = Sign.POSITIVE) -> DecimalFP:
    return DecimalFP.of(sign, w, q)


@pytest.mark.parametrize(
    "w, q, policy, text",
    [
        (12, 9, MIN, "12e9"),
        (123, 2, MIN, "12300"),
        (123, 2, C, "12300"),
        (123, 2, SCI, "1.23E4"),
        (11, -5, MIN, "1.1e-4"),
        (11, -5, C, "0.00011"),
        (11, -5, SCI, "1.1E-4"),
        (1, -1, SCI, "1E-1"),
        (1, -1, MIN, "0.1"),
        (1, -1, C, "0.1"),
        (215, 7, MIN, "2.15e9"),
        (215, 7, C, "2.15e+09"),
        (31415927, -7, MIN, "3.1415927"),
        (31415927, -7, C, "3.1415927"),
        (31415927, -7, SCI, "3.1415927E0"),
        (1, 0, MIN, "1"),
        (5, -324, MIN, "5e-324"),
        (5, -324, C, "5e-324"),
        (17976931348623157, 292, MIN, "1.7976931348623157e308"),
    ],
)
def test_render(w, q, policy, text):
    assert render(dec(w, q), policy).text == text


def test_render_sign_and_zero():
    assert render(dec(11, -5, Sign.NEGATIVE), MIN).text == "-1.1e-4"
    assert render(DecimalFP.zero(Sign.NEGATIVE), SCI).text == "-0"
    assert render(DecimalFP.zero(), C).text == "0"


def test_render_canonicalizes_input():
    assert render(dec(1200, -2), MIN).text == "12"


def test_scientific_policy_never_prints_fixed():
    assert render(dec(1, 0), SCI).text == "1E0"
    assert render(dec(123, 2), SCI).text == "1.23E4"


def test_c_style_prefers_exact_integer_when_no_longer():
    exact = dec(427819008, 1)
    assert render(dec(427819, 4), C).text == "4278190000"
    assert render(dec(427819, 4), C, exact=exact).text == "4278190080"


def test_rendered_length():
    rendered = render(dec(11, -5), MIN)
    assert rendered.length == len(rendered.text) == 6
    assert str(rendered) == "1.1e-4"
    with pytest.raises(ValueError):
        RenderedString("abc", 2)


@given(integers(min_value=0, max_value=10 ** 60))
def test_digits_to_chars_matches_str(n):
    assert digits_to_chars(BigUint.from_unsigned(n)) == str(n)


@pytest.mark.parametrize(
    "digits, q, text",
    [("5", -3, "0.005"), ("125", -1, "12.5"), ("7", 3, "7000"), ("42", -2, "0.42")],
)
def test_fixed_form(digits, q, text):
    assert fixed_form(digits, q) == text


@pytest.mark.parametrize(
    "name, policy",
    [("c", C), ("C_STYLE", C), ("minimal", MIN), (" sci ", SCI), ("scientific", SCI)],
)
def test_policy_from_name(name, policy):
    assert RenderPolicy.from_name(name) is policy


def test_unknown_policy():
    with pytest.raises(UnknownPolicyError):
        RenderPolicy.from_name("engineering")


def test_format_float_specials():
    dragon = Dragon4Converter()
    assert format_float(decode(0x7FC00000, BINARY32), MIN, dragon).text == "nan"
    assert format_float(decode(0xFF800000, BINARY32), C, dragon).text == "-inf"
    assert format_float(decode(0x80000000, BINARY32), MIN, dragon).text == "-0"


def test_format_float_c_style_large_binary32():
    d = decode(F32_4278190080, BINARY32)
    assert format_float(d, C, FastPathConverter()).text == "4278190080"
    assert format_float(d, MIN, FastPathConverter()).text == "4.27819e9"


@pytest.mark.parametrize(
    "d, text",
    [
        (decode(PI_F32, BINARY32), "3.1415927"),
        (decode(F32_2150000128, BINARY32), "2.15e9"),
        (decode(F32_4278190080, BINARY32), "4.27819e9"),
        (decoded(12e9), "12e9"),
        (decoded(1.0), "1"),
        (decoded(-0.1), "-0.1"),
        (decoded(1e23), "1e23"),
        (decode(0x80000000, BINARY32), "-0"),
        (decode(1, BINARY32), "1e-45"),
        (decode(1, BINARY64), "5e-324"),
        # binade starts, where the lower half-gap is narrower
        (decode(0x0F800000, BINARY32), "1.2621775e-29"),
        (decode(0x6B000000, BINARY32), "1.5474251e26"),
        (decode(0x0100000000000000, BINARY64), "7.291122019556398e-304"),
        # the nearest 8-digit value falls outside; a farther one fits
        (decode(0x5B68FDEB, BINARY32), "65581381e9"),
    ],
)
def test_to_shortest_string(d, text):
    assert to_shortest_string(d).text == text


def test_to_shortest_string_rejects_specials():
    with pytest.raises(FloatDomainError):
        to_shortest_string(decode(0x7FF0000000000000, BINARY64))
