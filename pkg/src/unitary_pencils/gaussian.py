"""Exact Gaussian rationals and parsing of complex number tokens."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Union

Number = Union[int, float, complex, Fraction, "GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        raise TypeError(f"not an exact number: {value!r}")

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        den = other.abs2()
        num = self * other.conjugate()
        return GaussianRational(num.re / den, num.im / den)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return GaussianRational(1) / self**-exponent
        result, base = GaussianRational(1), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im)) if self.im else hash(self.re)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self):
        if not self.im:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def to_exact(value) -> Optional[GaussianRational]:
    """Exact form of ``value`` or ``None`` if it is a float or complex float."""
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, (int, Rational)):
        return GaussianRational(Fraction(value))
    return None


def exact_tuple(values: Iterable) -> Optional[tuple[GaussianRational, ...]]:
    """All of ``values`` as Gaussian rationals, or ``None`` if any of them is inexact."""
    out = []
    for v in values:
        e = to_exact(v)
        if e is None:
            return None
        out.append(e)
    return tuple(out)


def rational_from_float(value) -> GaussianRational:
    """The exact binary value of a float or complex float as a Gaussian rational."""
    z = complex(value)
    return GaussianRational(Fraction(z.real), Fraction(z.imag))


_UREAL = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?(?:/\d+)?"
_REAL = r"[+-]?" + _UREAL


def _parse_real(text: str) -> Fraction:
    if "/" in text:
        num, den = text.split("/")
        return Fraction(num) / Fraction(den)
    return Fraction(text)


def parse_number(token: str) -> GaussianRational:
    """Parse ``"re"``, ``"re+imi"``, ``"imi"`` or ``"p/q"`` forms exactly.

    Decimal digits are read as exact rationals, so ``"0.3"`` is ``3/10``.
    """
    text = token.strip().replace(" ", "")
    if not text:
        raise ValueError("empty number token")
    m = re.fullmatch(rf"(?P<re>{_REAL})(?:(?P<sign>[+-])(?P<im>{_UREAL})?i)?", text)
    if m:
        real = _parse_real(m["re"])
        if m["sign"] is None:
            return GaussianRational(real)
        imag = _parse_real(m["im"]) if m["im"] else Fraction(1)
        return GaussianRational(real, imag if m["sign"] == "+" else -imag)
    m = re.fullmatch(rf"(?P<sign>[+-]?)(?P<im>{_UREAL})?i", text)
    if m:
        imag = _parse_real(m["im"]) if m["im"] else Fraction(1)
        return GaussianRational(0, -imag if m["sign"] == "-" else imag)
    raise ValueError(f"malformed complex token {token!r}")


def parse_vector(text: str) -> tuple[GaussianRational, ...]:
    """Comma-separated complex tokens."""
    return tuple(parse_number(t) for t in text.split(","))


def format_exact(value: GaussianRational | Fraction) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    return str(Fraction(value))
