"""Exact rational numbers and their text renderings.

Every quantity in this package (spectral numbers, averages, variances,
defects) is an exact ``fractions.Fraction``; floats never enter any
computation path.  Decimal strings are produced only at the reporting
boundary.
"""

from decimal import Decimal, localcontext
from fractions import Fraction

Ratio = Fraction

DECIMAL_DIGITS = 12


def format_ratio(r: Fraction) -> str:
    """Render a rational as "p/q" ("p" when the denominator is 1)."""
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def parse_ratio(text: str) -> Fraction:
    """Parse "p/q" or "p" back into an exact rational."""
    return Fraction(text)


def decimal_str(r: Fraction, digits: int = DECIMAL_DIGITS) -> str:
    """Advisory decimal rendering with the given number of significant digits."""
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(r.numerator) / Decimal(r.denominator))
