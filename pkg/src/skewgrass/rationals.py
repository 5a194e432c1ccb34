"""Exact rational scalars and their wire format.

Every scalar in this package is a ``fractions.Fraction``: always reduced,
arbitrary precision, never rounded.  Floats are rejected at the boundary so
no inexact value can leak in.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ValidationError


def to_fraction(value, path: str | None = None) -> Fraction:
    """Coerce an int or a ``"p/q"`` string to a Fraction.

    Floats are refused on purpose; exact input must be written exactly.
    """
    if isinstance(value, bool):
        raise ValidationError(f"expected a rational, got boolean {value!r}", path)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValidationError(f"malformed rational {value!r}: {exc}", path) from None
    raise ValidationError(f"expected a rational (int or 'p/q' string), got {type(value).__name__}", path)


def rat_str(q: Fraction) -> str:
    """Canonical wire form: ``"p"`` for integers, ``"p/q"`` otherwise."""
    return str(q)
