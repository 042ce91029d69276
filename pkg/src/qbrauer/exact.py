"""Exact rational scalars: parsing, formatting and generalized binomials."""

from fractions import Fraction
from numbers import Rational

__all__ = ["Fraction", "as_rational", "parse_rational", "format_rational", "gen_binom"]


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and "num/den" strings to a Fraction.

    Floats are rejected: every scalar in this package must be exact.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational literal: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    """Render as "num/den", dropping the denominator when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def gen_binom(m, k: int) -> Fraction:
    """Generalized binomial m(m-1)...(m-k+1)/k! for any rational m."""
    if k < 0:
        raise ValueError("k must be non-negative")
    m = as_rational(m)
    out = Fraction(1)
    for i in range(k):
        out = out * (m - i) / (i + 1)
    return out
