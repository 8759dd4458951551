"""Exact sign arithmetic for numbers of the form p + q*sqrt(2), p, q integers.

The sign is decided purely by integer comparisons of p^2 against 2 q^2, so
hyperplane evaluations never touch floating point.
"""

from __future__ import annotations

from dataclasses import dataclass


def sqrt2_sign(p: int, q: int) -> int:
    """Sign of p + q*sqrt(2) as -1, 0 or +1."""
    if p == 0 and q == 0:
        return 0
    if p >= 0 and q >= 0:
        return 1
    if p <= 0 and q <= 0:
        return -1
    # opposite signs: compare |p| against |q|*sqrt(2) by squaring;
    # p^2 == 2 q^2 is impossible for nonzero integers (sqrt(2) irrational)
    if p > 0:  # q < 0
        return 1 if p * p > 2 * q * q else -1
    return 1 if 2 * q * q > p * p else -1


@dataclass(frozen=True)
class QuadraticValue:
    """p + q*sqrt(2) with exact integer components."""

    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("QuadraticValue components must be integers")

    def sign(self) -> int:
        return sqrt2_sign(self.p, self.q)

    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def __add__(self, other: "QuadraticValue") -> "QuadraticValue":
        return QuadraticValue(self.p + other.p, self.q + other.q)

    def __neg__(self) -> "QuadraticValue":
        return QuadraticValue(-self.p, -self.q)

    def scaled(self, k: int) -> "QuadraticValue":
        return QuadraticValue(k * self.p, k * self.q)

    def __str__(self) -> str:
        if self.q == 0:
            return str(self.p)
        if self.p == 0:
            return f"{self.q}*sqrt2"
        op = "+" if self.q > 0 else "-"
        return f"{self.p}{op}{abs(self.q)}*sqrt2"


ZERO = QuadraticValue(0, 0)


def as_quadratic(value) -> QuadraticValue:
    """Coerce an int, (p, q) pair or QuadraticValue."""
    if isinstance(value, QuadraticValue):
        return value
    if isinstance(value, int):
        return QuadraticValue(value, 0)
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return QuadraticValue(int(value[0]), int(value[1]))
    raise TypeError(f"cannot interpret {value!r} as p + q*sqrt(2)")
