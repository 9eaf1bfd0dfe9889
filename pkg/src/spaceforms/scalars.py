"""Coefficient scalars: exact Gaussian rationals, or binary64 complex.

Every series in this package stores its coefficients either exactly, as a
:class:`GaussianRational` (real and imaginary part each a
:class:`fractions.Fraction`), or approximately, as a built-in ``complex``.
Exact values stay exact under arithmetic; as soon as a float or complex
enters an expression the result degrades to ``complex``.  ``int`` and
``Fraction`` inputs count as exact and are promoted on construction.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

ExactLike = Union[int, Fraction, "GaussianRational"]
Scalar = Union["GaussianRational", complex]


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction | str = 0, im: int | Fraction | str = 0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("floats are approximate; use complex instead")
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        """Return the pair (self', other') in a common arithmetic mode."""
        if isinstance(other, GaussianRational):
            return self, other
        if isinstance(other, (int, Fraction)):
            return self, GaussianRational(other)
        if isinstance(other, (float, complex)):
            return complex(self), complex(other)
        return self, NotImplemented

    def __add__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if isinstance(a, complex):
            return a + b
        return GaussianRational(a.re + b.re, a.im + b.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if isinstance(a, complex):
            return a - b
        return GaussianRational(a.re - b.re, a.im - b.im)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if isinstance(a, complex):
            return a * b
        return GaussianRational(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        a, b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        if isinstance(a, complex):
            return a / b
        n = b.norm_sq()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n
        )

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other).__truediv__(self)
        if isinstance(other, (float, complex)):
            return complex(other) / complex(self)
        return NotImplemented

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = GaussianRational(1)
        for _ in range(k):
            out = out * self
        return out

    # -- structure -------------------------------------------------------

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_sq(self) -> Fraction:
        """|self|^2, exactly."""
        return self.re * self.re + self.im * self.im

    @property
    def real(self):
        return self.re

    @property
    def imag(self):
        return self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if self.im == 0:
            return f"GaussianRational({self.re!s})"
        return f"GaussianRational({self.re!s}, {self.im!s})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def as_scalar(x) -> Scalar:
    """Promote x to a coefficient scalar (exact if possible)."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(x)
    if isinstance(x, (float, complex)):
        return complex(x)
    raise TypeError(f"cannot use {type(x).__name__} as a coefficient scalar")


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational))


def conj(x: Scalar) -> Scalar:
    return x.conjugate()


def abs_sq(x: Scalar):
    """|x|^2: a Fraction for exact scalars, a float otherwise."""
    if isinstance(x, GaussianRational):
        return x.norm_sq()
    x = complex(x)
    return x.real * x.real + x.imag * x.imag


def to_complex(x: Scalar) -> complex:
    return complex(x)


def rational_str(q: Fraction) -> str:
    """Serialize a rational as a decimal integer ratio ("3/2", "-5", "0")."""
    return str(Fraction(q))


def parse_rational(text) -> Fraction:
    """Parse "p/q" (integers accepted as shorthand) to an exact Fraction."""
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, Fraction):
        return text
    if isinstance(text, str):
        return Fraction(text.strip())
    raise TypeError(f"expected a rational literal, got {type(text).__name__}")


def scalar_json_parts(x: Scalar):
    """(re, im) for JSON: "p/q" strings when exact, numbers otherwise."""
    if isinstance(x, GaussianRational):
        return rational_str(x.re), rational_str(x.im)
    if isinstance(x, (int, Fraction)):
        return rational_str(Fraction(x)), "0"
    x = complex(x)
    return x.real, x.imag


def scalar_from_json_parts(re, im) -> Scalar:
    """Inverse of scalar_json_parts (strings exact, numbers approximate)."""
    if isinstance(re, str) and isinstance(im, str):
        return GaussianRational(Fraction(re), Fraction(im))
    if isinstance(re, (int, float)) and isinstance(im, (int, float)):
        return complex(re, im)
    raise TypeError("re/im must both be rational strings or both be numbers")
