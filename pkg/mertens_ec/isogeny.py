"""Waterhouse classification of Frobenius traces of elliptic curves over F_q."""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import isqrt
from typing import Iterator, List, Optional, Union

from .errors import HasseViolation, Inadmissible
from .finite_field import PrimePower, prime_power


@dataclass(frozen=True)
class RationalAngle:
    """theta = k*pi/n in lowest terms."""

    k: int
    n: int

    @property
    def radians(self) -> float:
        return self.k * math.pi / self.n

    @property
    def over_pi(self) -> Fraction:
        return Fraction(self.k, self.n)

    def __str__(self) -> str:
        if self.k == 0:
            return "0"
        head = "pi" if self.k == 1 else f"{self.k}pi"
        return head if self.n == 1 else f"{head}/{self.n}"


class IrrationalAngle:
    def __repr__(self) -> str:
        return "IrrationalAngle"


IRRATIONAL = IrrationalAngle()


class CaseTag(str, Enum):
    C1 = "1"
    C2i = "2i"
    C2ii = "2ii"
    C3i = "3i"
    C3ii = "3ii"
    C4i = "4i"
    C4ii = "4ii"
    C4iii = "4iii"
    C4iv = "4iv"
    C5 = "5"


_ANGLES = {
    CaseTag.C2i: RationalAngle(0, 1),
    CaseTag.C2ii: RationalAngle(1, 1),
    CaseTag.C3i: RationalAngle(1, 3),
    CaseTag.C3ii: RationalAngle(2, 3),
    CaseTag.C4i: RationalAngle(1, 4),
    CaseTag.C4ii: RationalAngle(3, 4),
    CaseTag.C4iii: RationalAngle(1, 6),
    CaseTag.C4iv: RationalAngle(5, 6),
    CaseTag.C5: RationalAngle(1, 2),
}


@dataclass(frozen=True)
class WaterhouseCase:
    tag: CaseTag

    @property
    def theta_kind(self) -> Union[RationalAngle, IrrationalAngle]:
        return _ANGLES.get(self.tag, IRRATIONAL)

    @property
    def is_rational(self) -> bool:
        return self.tag is not CaseTag.C1

    @property
    def is_double_zero(self) -> bool:
        return self.tag in (CaseTag.C2i, CaseTag.C2ii)

    @property
    def period(self) -> Optional[int]:
        """2n for theta = k*pi/n; None for an irrational angle."""
        angle = self.theta_kind
        return 2 * angle.n if isinstance(angle, RationalAngle) else None

    def __str__(self) -> str:
        return self.tag.value


@dataclass(frozen=True)
class IsogenyClass:
    q: PrimePower
    a: int
    case: WaterhouseCase
    theta: float

    @property
    def p(self) -> int:
        return self.q.p

    @property
    def m(self) -> int:
        return self.q.m

    @property
    def discriminant(self) -> int:
        """4q - a^2 >= 0; zero exactly for the double-zero classes."""
        return 4 * self.q.q - self.a * self.a

    @property
    def period(self) -> Optional[int]:
        return self.case.period

    def label(self) -> str:
        return f"(q={self.q.q}, a={self.a})"


def _hasse(q: PrimePower, a: int) -> None:
    if a * a > 4 * q.q:
        raise HasseViolation(f"a = {a} violates a^2 <= 4q for q = {q.q}")


def matching_cases(q: Union[int, PrimePower], a: int) -> List[CaseTag]:
    """Every Waterhouse condition satisfied by (q, a), in testing order."""
    q = prime_power(q)
    p, m, n = q.p, q.m, q.q
    out: List[CaseTag] = []
    root = q.sqrt
    if m % 2 == 0 and root is not None:
        if a == 2 * root:
            out.append(CaseTag.C2i)
        elif a == -2 * root:
            out.append(CaseTag.C2ii)
        if p % 3 != 1:
            if a == root:
                out.append(CaseTag.C3i)
            elif a == -root:
                out.append(CaseTag.C3ii)
    if m % 2 == 1 and p in (2, 3) and a * a == p * n:
        if p == 2:
            out.append(CaseTag.C4i if a > 0 else CaseTag.C4ii)
        else:
            out.append(CaseTag.C4iii if a > 0 else CaseTag.C4iv)
    if a == 0 and (m % 2 == 1 or p % 4 != 1):
        out.append(CaseTag.C5)
    if a % p != 0 and a * a < 4 * n:
        out.append(CaseTag.C1)
    return out


def _inadmissible_reason(q: PrimePower, a: int) -> str:
    root = q.sqrt
    if a == 0:
        return "p ≡ 1 (mod 4) with m even"
    if root is not None and abs(a) == root:
        return "p ≡ 1 (mod 3) with m even"
    return f"a ≡ 0 (mod {q.p}) without a supersingular form"


def frobenius_angle(q: Union[int, PrimePower], a: int) -> float:
    """theta = arccos(a / (2 sqrt q)) in [0, pi]; exact k*pi/n for rational-angle classes."""
    q = prime_power(q)
    _hasse(q, a)
    cases = matching_cases(q, a)
    if cases:
        angle = WaterhouseCase(cases[0]).theta_kind
        if isinstance(angle, RationalAngle):
            return angle.radians
    c = a / (2.0 * math.sqrt(q.q))
    return math.acos(max(-1.0, min(1.0, c)))


def classify(q: Union[int, PrimePower], a: int) -> IsogenyClass:
    q = prime_power(q)
    a = int(a)
    _hasse(q, a)
    cases = matching_cases(q, a)
    if not cases:
        raise Inadmissible(_inadmissible_reason(q, a))
    return IsogenyClass(q=q, a=a, case=WaterhouseCase(cases[0]), theta=frobenius_angle(q, a))


def hasse_range(q: Union[int, PrimePower]) -> range:
    bound = isqrt(4 * prime_power(q).q)
    return range(-bound, bound + 1)


def admissible_traces(q: Union[int, PrimePower]) -> List[int]:
    q = prime_power(q)
    return [a for a in hasse_range(q) if matching_cases(q, a)]


def admissible_classes(q: Union[int, PrimePower]) -> Iterator[IsogenyClass]:
    q = prime_power(q)
    for a in admissible_traces(q):
        yield classify(q, a)


def prime_powers_up_to(q_max: int) -> List[PrimePower]:
    out = []
    for n in range(2, q_max + 1):
        try:
            out.append(PrimePower.of(n))
        except ValueError:
            continue
    return out
