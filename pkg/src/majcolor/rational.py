"""Exact rank values.

Ranks are :class:`fractions.Fraction` objects restricted to the signed 64-bit
range for numerator and denominator; anything outside is rejected with
:class:`RankOverflowError` instead of silently growing.
"""

from fractions import Fraction

from .exceptions import RankOverflowError

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def fits_int64(value):
    return INT64_MIN <= value <= INT64_MAX


def check_rational(value):
    """Return ``value`` as a Fraction, raising if it leaves the 64-bit range."""
    if type(value) is not Fraction:
        value = Fraction(value)
    if not (fits_int64(value.numerator) and fits_int64(value.denominator)):
        raise RankOverflowError(f"rational {value} does not fit in 64 bits")
    return value


def parse_rational(text):
    """Parse ``"p/q"`` or ``"k"`` into a Fraction. Decimal notation is refused."""
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not an integer or p/q fraction: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return check_rational(Fraction(n, d))


def format_rational(value):
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
