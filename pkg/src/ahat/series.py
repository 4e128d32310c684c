"""Truncated one-variable power series over the rationals.

Carries the characteristic series that define the multiplicative sequences:
the A-hat series (sqrt(z)/2)/sinh(sqrt(z)/2) and the signature series
sqrt(z)/tanh(sqrt(z)).  Both are produced by series division at runtime;
no coefficient tables are hard-coded.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class NonUnitError(ValueError):
    """Raised when inverting a series whose constant term is zero."""


class PowerSeries:
    """Coefficients c_0..c_n of a series truncated at order n."""

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients):
        coeffs = tuple(Fraction(c) for c in coefficients)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        object.__setattr__(self, "_coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("PowerSeries is immutable")

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def truncation_order(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, j: int) -> Fraction:
        if not 0 <= j <= self.truncation_order:
            raise IndexError(f"coefficient {j} beyond truncation order {self.truncation_order}")
        return self._coeffs[j]

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.truncation_order, other.truncation_order)
        return PowerSeries([self._coeffs[j] + other._coeffs[j] for j in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.truncation_order, other.truncation_order)
        return PowerSeries([self._coeffs[j] - other._coeffs[j] for j in range(n + 1)])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        n = min(self.truncation_order, other.truncation_order)
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self._coeffs[: n + 1]):
            if not a:
                continue
            for j in range(n + 1 - i):
                b = other._coeffs[j]
                if b:
                    out[i + j] += a * b
        return PowerSeries(out)

    def reciprocal(self) -> "PowerSeries":
        """Series t with self * t = 1 up to the truncation order."""
        c = self._coeffs
        if c[0] == 0:
            raise NonUnitError("series with zero constant term has no reciprocal")
        n = self.truncation_order
        out = [Fraction(0)] * (n + 1)
        out[0] = 1 / c[0]
        for j in range(1, n + 1):
            out[j] = -sum(c[i] * out[j - i] for i in range(1, j + 1)) / c[0]
        return PowerSeries(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, PowerSeries) and self._coeffs == other._coeffs

    def __repr__(self) -> str:
        return f"PowerSeries({list(self._coeffs)!r})"


def series_reciprocal(s: PowerSeries) -> PowerSeries:
    return s.reciprocal()


def ahat_series(order: int) -> PowerSeries:
    """Characteristic series of the A-hat genus, (sqrt(z)/2)/sinh(sqrt(z)/2).

    With w = sqrt(z)/2 one has sinh(w)/w = sum_n w^(2n)/(2n+1)!, i.e. the
    z-series sum_n z^n/(4^n (2n+1)!); its reciprocal starts
    1 - z/24 + 7 z^2/5760 - ...
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    denom = PowerSeries(
        [Fraction(1, 4**n * factorial(2 * n + 1)) for n in range(order + 1)]
    )
    return denom.reciprocal()


def l_series(order: int) -> PowerSeries:
    """Characteristic series of the signature genus, sqrt(z)/tanh(sqrt(z)).

    cosh(w) = sum_n z^n/(2n)! and sinh(w)/w = sum_n z^n/(2n+1)! at w = sqrt(z),
    giving 1 + z/3 - z^2/45 + ...
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    cosh = PowerSeries([Fraction(1, factorial(2 * n)) for n in range(order + 1)])
    sinh_over_w = PowerSeries(
        [Fraction(1, factorial(2 * n + 1)) for n in range(order + 1)]
    )
    return cosh * sinh_over_w.reciprocal()
