"""Exact arithmetic in Q and in the quadratic extension Q(sqrt(r)).

Rationals are :class:`fractions.Fraction`; they are already kept in lowest
terms with a positive denominator after every operation.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

Rat = Fraction


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def _is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


class RadicandMismatch(ValueError):
    """Raised when combining elements of different quadratic fields."""


class ExtScalar:
    """The value ``rat + irr * sqrt(radicand)`` with rational ``rat``, ``irr``.

    A perfect-square radicand folds the irrational part into ``rat`` so the
    representation stays unique.
    """

    __slots__ = ("rat", "irr", "radicand")

    def __init__(self, rat=0, irr=0, radicand: int = 1):
        if not isinstance(radicand, int) or radicand < 1:
            raise ValueError(f"radicand must be a positive integer, got {radicand!r}")
        rat = _as_fraction(rat)
        irr = _as_fraction(irr)
        if irr and _is_square(radicand):
            rat += irr * isqrt(radicand)
            irr = Fraction(0)
        object.__setattr__(self, "rat", rat)
        object.__setattr__(self, "irr", irr)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("ExtScalar is immutable")

    @classmethod
    def sqrt(cls, radicand: int) -> "ExtScalar":
        """The element ``sqrt(radicand)`` itself."""
        return cls(0, 1, radicand)

    def _coerce(self, other) -> "ExtScalar":
        if isinstance(other, ExtScalar):
            if other.radicand != self.radicand:
                raise RadicandMismatch(
                    f"cannot combine sqrt({self.radicand}) with sqrt({other.radicand})"
                )
            return other
        if isinstance(other, (int, Rational)):
            return ExtScalar(other, 0, self.radicand)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtScalar(self.rat + other.rat, self.irr + other.irr, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return ExtScalar(-self.rat, -self.irr, self.radicand)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return ExtScalar(self.rat - other.rat, self.irr - other.irr, self.radicand)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        r = self.radicand
        return ExtScalar(
            self.rat * other.rat + self.irr * other.irr * r,
            self.rat * other.irr + self.irr * other.rat,
            r,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ExtScalar":
        """Galois conjugate ``rat - irr * sqrt(radicand)``."""
        return ExtScalar(self.rat, -self.irr, self.radicand)

    def norm(self) -> Fraction:
        """Field norm ``rat**2 - irr**2 * radicand``."""
        return self.rat * self.rat - self.irr * self.irr * self.radicand

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt(r))")
        num = self * other.conjugate()
        return ExtScalar(num.rat / n, num.irr / n, self.radicand)

    def __eq__(self, other):
        if isinstance(other, ExtScalar):
            return (
                self.radicand == other.radicand
                and self.rat == other.rat
                and self.irr == other.irr
            )
        if isinstance(other, (int, Rational)):
            return self.irr == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.irr == 0:
            return hash(self.rat)
        return hash((self.rat, self.irr, self.radicand))

    def __bool__(self):
        return bool(self.rat) or bool(self.irr)

    def __float__(self):
        return float(self.rat) + float(self.irr) * self.radicand ** 0.5

    def __repr__(self):
        return f"ExtScalar({self.rat}, {self.irr}, radicand={self.radicand})"

    def __str__(self):
        if self.irr == 0:
            return str(self.rat)
        return f"{self.rat} + {self.irr}*sqrt({self.radicand})"


def ext_arith(a: ExtScalar, b: ExtScalar, op: str) -> ExtScalar:
    """Dispatch ``add``/``sub``/``mul``/``neg`` on two field elements.

    ``neg`` ignores ``b``. Mismatched radicands raise :class:`RadicandMismatch`.
    """
    if op == "neg":
        return -a
    if a.radicand != b.radicand:
        raise RadicandMismatch(f"radicand {a.radicand} != {b.radicand}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def _sgn(x) -> int:
    return (x > 0) - (x < 0)


def sign_parts(rat, irr, radicand: int) -> int:
    """Exact sign of ``rat + irr*sqrt(radicand)`` for rationals or integers.

    When the two parts disagree in sign the larger magnitude wins, decided by
    comparing ``rat**2`` with ``irr**2 * radicand``.
    """
    sr, si = _sgn(rat), _sgn(irr)
    if si == 0:
        return sr
    if sr == 0 or sr == si:
        return si
    lhs = rat * rat
    rhs = irr * irr * radicand
    if lhs > rhs:
        return sr
    if lhs < rhs:
        return si
    return 0


def ext_sign(a: ExtScalar) -> int:
    """Exact sign of an :class:`ExtScalar`, in {-1, 0, 1}. No floating point."""
    return sign_parts(a.rat, a.irr, a.radicand)
