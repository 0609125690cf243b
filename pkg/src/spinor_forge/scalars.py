"""Exact scalar arithmetic: rationals and Gaussian rationals.

Rationals are ``fractions.Fraction`` (arbitrary precision, always reduced,
so equality is structural).  ``GaussianRational`` is the only scalar type
used by the spinor kernel: an element a+bi of Q(i) stored componentwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction

RationalLike = Union[Fraction, int]


@dataclass(frozen=True, slots=True)
class GaussianRational:
    """Exact complex number a+bi with rational a, b."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", Fraction(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", Fraction(self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: GaussianRational) -> GaussianRational:
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> GaussianRational:
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: Union[GaussianRational, RationalLike]) -> GaussianRational:
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return GaussianRational(self.re * other, self.im * other)

    __rmul__ = __mul__

    def __truediv__(self, other: Union[GaussianRational, RationalLike]) -> GaussianRational:
        if not isinstance(other, GaussianRational):
            other = GaussianRational(Fraction(other))
        n2 = other.re * other.re + other.im * other.im
        if n2 == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n2,
            (self.im * other.re - self.re * other.im) / n2,
        )

    def conj(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus |a+bi|^2 = a^2 + b^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


GR_ZERO = GaussianRational()
GR_ONE = GaussianRational(Fraction(1))
GR_I = GaussianRational(Fraction(0), Fraction(1))
GR_MINUS_ONE = GaussianRational(Fraction(-1))
GR_MINUS_I = GaussianRational(Fraction(0), Fraction(-1))


def gr(re: RationalLike = 0, im: RationalLike = 0) -> GaussianRational:
    """Convenience constructor accepting ints, Fractions or 'p/q' strings."""
    return GaussianRational(Fraction(re), Fraction(im))


def format_rational(x: Fraction) -> str:
    """Render as 'p/q', omitting '/q' when the denominator is 1."""
    return str(x)


def parse_rational(s: str) -> Fraction:
    return Fraction(s)
