"""
Exact rational scalars and vectors.

Every polytope coordinate in the toolkit is a ``fractions.Fraction``; on the
wire rationals travel as "num/den" strings.
"""

from fractions import Fraction
from numbers import Rational
from typing import Iterable, List, Sequence, Tuple, Union

from utils.errors import InputError

Rat = Fraction
Vector = Tuple[Fraction, ...]
RatLike = Union[int, str, Fraction]


def to_rat(value: RatLike) -> Fraction:
    """Parse an int, Fraction or "num/den" string into a Fraction."""
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as e:
            raise InputError(f"not a rational: {value!r}") from e
    raise InputError(f"not a rational: {value!r} (floats are not accepted)")


def to_vector(values: Iterable[RatLike]) -> Vector:
    return tuple(to_rat(v) for v in values)


def format_rat(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Sequence[Fraction]) -> List[str]:
    return [format_rat(v) for v in vector]


def parse_vector(values: Sequence[RatLike]) -> Vector:
    """Inverse of ``format_vector``."""
    return to_vector(values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))
