"""Exact complex-rational scalars graded by an integer power of hbar.

Coefficients in this package are never floating point.  A scalar is
``(re + im*i) * hbar**hbar_power`` with ``re`` and ``im`` arbitrary-precision
rationals.  hbar stays a formal symbol: it is a dimensional constant, so
scalars of different grade never merge (they live in different terms of a
polynomial), while products add grades.  The grade is what lets the
symmetrizer recognize and annihilate commutator remainders, and a negative
grade hosts the 1/(i*hbar) prefactor of commutator brackets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

RationalLike = int | Fraction


def _as_fraction(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")


@dataclass(frozen=True, slots=True)
class HbarScalar:
    """A single graded coefficient ``(re + im*i) * hbar**hbar_power``."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)
    hbar_power: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re))
        object.__setattr__(self, "im", _as_fraction(self.im))
        if not isinstance(self.hbar_power, int):
            raise TypeError("hbar_power must be an int")
        # Zero is unique: its grade is normalized away.
        if not self.re and not self.im:
            object.__setattr__(self, "hbar_power", 0)

    @classmethod
    def of(cls, re: RationalLike, im: RationalLike = 0, hbar_power: int = 0) -> HbarScalar:
        return cls(_as_fraction(re), _as_fraction(im), hbar_power)

    @classmethod
    def real(cls, value: RationalLike) -> HbarScalar:
        return cls(_as_fraction(value))

    @classmethod
    def imag(cls, value: RationalLike) -> HbarScalar:
        return cls(Fraction(0), _as_fraction(value))

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def __bool__(self) -> bool:
        return not self.is_zero

    def __add__(self, other: HbarScalar) -> HbarScalar:
        if not isinstance(other, HbarScalar):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.hbar_power != other.hbar_power:
            raise ValueError(
                f"cannot add scalars of different hbar grade "
                f"({self.hbar_power} vs {other.hbar_power}); "
                "they belong in separate polynomial terms"
            )
        return HbarScalar(self.re + other.re, self.im + other.im, self.hbar_power)

    def __neg__(self) -> HbarScalar:
        return HbarScalar(-self.re, -self.im, self.hbar_power)

    def __sub__(self, other: HbarScalar) -> HbarScalar:
        return self + (-other)

    def __mul__(self, other: HbarScalar | RationalLike) -> HbarScalar:
        if isinstance(other, (int, Fraction)):
            other = HbarScalar.real(other)
        if not isinstance(other, HbarScalar):
            return NotImplemented
        return HbarScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
            self.hbar_power + other.hbar_power,
        )

    def __rmul__(self, other: RationalLike) -> HbarScalar:
        return self * other

    def __truediv__(self, other: HbarScalar | RationalLike) -> HbarScalar:
        if isinstance(other, (int, Fraction)):
            other = HbarScalar.real(other)
        if not isinstance(other, HbarScalar):
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero scalar")
        norm = other.re * other.re + other.im * other.im
        return HbarScalar(
            (self.re * other.re + self.im * other.im) / norm,
            (self.im * other.re - self.re * other.im) / norm,
            self.hbar_power - other.hbar_power,
        )

    def conjugate(self) -> HbarScalar:
        """Complex conjugate; hbar is real, so the grade is unchanged."""
        return HbarScalar(self.re, -self.im, self.hbar_power)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.im == 0:
            num = str(self.re)
        elif self.re == 0:
            num = f"{self.im}i"
        else:
            sign = "+" if self.im > 0 else "-"
            num = f"({self.re}{sign}{abs(self.im)}i)"
        if self.hbar_power == 0:
            return num
        suffix = "hbar" if self.hbar_power == 1 else f"hbar^{self.hbar_power}"
        return f"{num}*{suffix}"


ZERO = HbarScalar()
ONE = HbarScalar.real(1)
I = HbarScalar.imag(1)
HBAR = HbarScalar(Fraction(1), Fraction(0), 1)
I_HBAR = HbarScalar(Fraction(0), Fraction(1), 1)
# 1/(i*hbar) = -i * hbar**-1
INV_I_HBAR = HbarScalar(Fraction(0), Fraction(-1), -1)
