"""Exact rational scalars and their text form.

Every scalar in the package is a :class:`fractions.Fraction`. Floats are
refused on purpose: a float silently carries a binary rounding error into
what is otherwise an exact computation.
"""

from __future__ import annotations

from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[int, Fraction, str]


def to_fraction(value: Scalar) -> Fraction:
    """Convert ``value`` to a Fraction, rejecting floats.

    Strings may be ``"3"``, ``"-3/4"`` or ``" 7 / 2 "``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        text = value.replace(" ", "")
        if not text:
            raise ValueError("empty rational literal")
        try:
            return Fraction(text)
        except ValueError:
            raise ValueError(f"not a rational literal: {value!r}") from None
    raise TypeError(f"expected int, Fraction or str, got {type(value).__name__}")


def fmt(value: Fraction) -> str:
    """Render as ``num/den`` (integers without the denominator)."""
    return str(Fraction(value))


def to_decimal(value: Fraction, digits: int) -> str:
    """Approximate decimal rendering with ``digits`` significant digits."""
    value = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = max(1, digits)
        return str(Decimal(value.numerator) / Decimal(value.denominator))
