"""Exact real numbers r*sqrt(d) with r rational and d a squarefree positive integer.

Every normalised ratio M(X)/q^{X/2} is of this form with d in {1, p}, so
residue tables and limsups can be compared exactly.
"""
from __future__ import annotations

import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

import mpmath

from .finite_field import prime_factors

# mpmath keeps its precision in one process-wide context; sweeps evaluate from worker threads
_MP_LOCK = threading.RLock()


@contextmanager
def working_precision(dps: Optional[int] = None) -> Iterator[None]:
    with _MP_LOCK, mpmath.workdps(dps or mpmath.mp.dps):
        yield


def _squarefree_split(n: int):
    """n = s^2 * d with d squarefree; returns (s, d)."""
    s, d = 1, 1
    for p in prime_factors(n):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        s *= p ** (e // 2)
        if e % 2:
            d *= p
    return s, d


@dataclass(frozen=True)
class Surd:
    coeff: Fraction
    radicand: int = 1

    @classmethod
    def of(cls, coeff, radicand: int = 1) -> "Surd":
        s, d = _squarefree_split(radicand)
        return cls(Fraction(coeff) * s, d)

    @classmethod
    def ratio(cls, numerator: int, q: int, x: int) -> "Surd":
        """numerator / q^{x/2}, exactly."""
        if x % 2 == 0:
            return cls(Fraction(numerator, q ** (x // 2)))
        # n / q^{x/2} = n / q^{(x+1)/2} * sqrt(q)
        return cls.of(Fraction(numerator, q ** ((x + 1) // 2)), q)

    @property
    def square(self) -> Fraction:
        return self.coeff * self.coeff * self.radicand

    @property
    def sign(self) -> int:
        return (self.coeff > 0) - (self.coeff < 0)

    def __abs__(self) -> "Surd":
        return Surd(abs(self.coeff), self.radicand)

    def __neg__(self) -> "Surd":
        return Surd(-self.coeff, self.radicand)

    def __eq__(self, other) -> bool:
        if isinstance(other, Surd):
            return self.sign == other.sign and self.square == other.square
        if isinstance(other, (int, Fraction)):
            return self.radicand == 1 and self.coeff == other or (self.coeff == 0 and other == 0)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.sign, self.square))

    def __lt__(self, other: "Surd") -> bool:
        if self.sign != other.sign:
            return self.sign < other.sign
        if self.sign >= 0:
            return self.square < other.square
        return self.square > other.square

    def to_mpf(self, dps: Optional[int] = None):
        with working_precision(dps):
            return mpmath.mpf(self.coeff.numerator) / self.coeff.denominator * mpmath.sqrt(self.radicand)

    def __float__(self) -> float:
        return float(self.to_mpf(30))

    def __str__(self) -> str:
        if self.coeff == 0:
            return "0"
        if self.radicand == 1:
            return str(self.coeff)
        c = self.coeff
        head = "" if c == 1 else ("-" if c == -1 else f"{c}*")
        return f"{head}sqrt({self.radicand})"
