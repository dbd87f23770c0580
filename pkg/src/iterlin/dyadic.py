"""Exact dyadic rationals (p / 2^q), the value domain of degree growth constants."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering


@total_ordering
@dataclass(frozen=True)
class DyadicRational:
    """Normalized p / 2^q: numerator odd, or exponent zero."""

    numerator: int
    exponent: int = 0

    def __post_init__(self):
        if self.exponent < 0:
            raise ValueError("exponent must be non-negative")
        num, exp = self.numerator, self.exponent
        while exp > 0 and num % 2 == 0:
            num //= 2
            exp -= 1
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "exponent", exp)

    @staticmethod
    def from_int(value: int) -> "DyadicRational":
        return DyadicRational(value, 0)

    @staticmethod
    def scaled(value: int, power_of_two: int) -> "DyadicRational":
        """value * 2^power_of_two, where the power may be negative."""
        if power_of_two >= 0:
            return DyadicRational(value << power_of_two, 0)
        return DyadicRational(value, -power_of_two)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = DyadicRational.from_int(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return (self.numerator, self.exponent) == (other.numerator, other.exponent)

    def __lt__(self, other) -> bool:
        if isinstance(other, int):
            other = DyadicRational.from_int(other)
        if not isinstance(other, DyadicRational):
            return NotImplemented
        return self.numerator << other.exponent < other.numerator << self.exponent

    def __hash__(self) -> int:
        return hash((self.numerator, self.exponent))

    def __add__(self, other: "DyadicRational") -> "DyadicRational":
        if isinstance(other, int):
            other = DyadicRational.from_int(other)
        e = max(self.exponent, other.exponent)
        num = (self.numerator << (e - self.exponent)) + (other.numerator << (e - other.exponent))
        return DyadicRational(num, e)

    def times_pow2(self, power: int) -> "DyadicRational":
        if power >= 0:
            return DyadicRational(self.numerator << power, self.exponent)
        return DyadicRational(self.numerator, self.exponent - power)

    def __float__(self) -> float:
        return self.numerator / (1 << self.exponent)

    def __str__(self) -> str:
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"

    def __repr__(self) -> str:
        return f"DyadicRational({self.numerator}, {self.exponent})"
