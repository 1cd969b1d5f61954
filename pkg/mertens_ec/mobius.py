"""Degree-aggregated Moebius coefficients, exact Mertens sums and their closed forms."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import mpmath

from .config import DEFAULT_CONFIG
from .errors import DoubleZero
from .isogeny import CaseTag, IsogenyClass
from .series import prefix_sums
from .surd import Surd, working_precision
from .zeta import l_polynomial


@dataclass(frozen=True)
class MobiusSeries:
    cls: IsogenyClass
    coeffs: List[int]

    def __len__(self) -> int:
        return len(self.coeffs)


def mobius_coefficients(cls: IsogenyClass, n_max: int) -> MobiusSeries:
    """c_0..c_{n_max} of 1/Z(u) = (1 - u)(1 - qu) / P(u)."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    q = cls.q.q
    s = l_polynomial(cls).reciprocal_coefficients(n_max)

    def at(k: int) -> int:
        return s[k] if k >= 0 else 0

    coeffs = [at(n) - (1 + q) * at(n - 1) + q * at(n - 2) for n in range(n_max + 1)]
    return MobiusSeries(cls=cls, coeffs=coeffs)


def signed_ratio(total: int, q: int, x: int) -> float:
    """M / q^{x/2} as a float, from the exact rational M^2 / q^x."""
    if total == 0:
        return 0.0
    # sign taken from the int; total itself may exceed float range
    r = math.sqrt(total * total / q ** x)
    return r if total > 0 else -r


@dataclass(frozen=True)
class MertensTrajectory:
    cls: IsogenyClass
    sums: List[int]
    ratios: List[float] = field(repr=False)

    def at(self, x: int) -> int:
        return self.sums[x - 1]

    def ratio(self, x: int) -> float:
        return self.ratios[x - 1]

    def exact_ratio(self, x: int) -> Surd:
        return Surd.ratio(self.sums[x - 1], self.cls.q.q, x)

    def rows(self) -> List[dict]:
        return [{"X": x, "M": m, "ratio": r} for x, (m, r) in enumerate(zip(self.sums, self.ratios), start=1)]


def mertens_sums(cls: IsogenyClass, x_max: int) -> MertensTrajectory:
    """M(1)..M(x_max) with M(X) = c_0 + ... + c_{X-1}."""
    if x_max < 1:
        raise ValueError("x_max must be at least 1")
    q = cls.q.q
    sums = prefix_sums(mobius_coefficients(cls, x_max - 1).coeffs)
    ratios = [signed_ratio(m, q, x) for x, m in enumerate(sums, start=1)]
    return MertensTrajectory(cls=cls, sums=sums, ratios=ratios)


def _sine_coefficient(cls: IsogenyClass):
    # (a - 2) / sqrt(4q - a^2) at working precision
    return mpmath.mpf(cls.a - 2) / mpmath.sqrt(cls.discriminant)


def _angle(cls: IsogenyClass):
    kind = cls.case.theta_kind
    if cls.case.is_rational:
        return mpmath.pi * kind.k / kind.n
    return mpmath.acos(mpmath.mpf(cls.a) / (2 * mpmath.sqrt(cls.q.q)))


def closed_form_ratio_mp(cls: IsogenyClass, x: int, dps: Optional[int] = None):
    """M(x)/q^{x/2} from the residue formulas, as an mpmath number."""
    if x < 1:
        raise ValueError("x must be at least 1")
    with working_precision(dps or DEFAULT_CONFIG.precision.dps):
        if cls.case.is_double_zero:
            root_inv = 1 / mpmath.sqrt(cls.q.q)
            if cls.case.tag is CaseTag.C2i:
                return 1 - (1 - root_inv) * x
            sign = -1 if x % 2 else 1
            return -sign * (1 + root_inv) * x + sign
        theta = _angle(cls)
        return mpmath.cos(x * theta) - _sine_coefficient(cls) * mpmath.sin(x * theta)


def closed_form_ratio(cls: IsogenyClass, x: int) -> float:
    return float(closed_form_ratio_mp(cls, x, dps=30))


def closed_form_coefficient(cls: IsogenyClass, n: int, dps: Optional[int] = None):
    """c_n from the residues of u^{-n-1}/Z(u) at the inverse zeroes."""
    with working_precision(dps or DEFAULT_CONFIG.precision.dps):
        base = 1 if n == 0 else 0
        q = cls.q.q
        if cls.case.is_double_zero:
            sign = 1 if cls.case.tag is CaseTag.C2i else -1
            root = mpmath.sqrt(q)
            if n == 0:
                return mpmath.mpf(base)
            return -(sign ** (n + 1)) * (root - sign) ** 2 * n * mpmath.power(q, mpmath.mpf(n - 1) / 2) + base
        gamma = mpmath.sqrt(q) * mpmath.expj(_angle(cls))
        gbar = mpmath.conj(gamma)
        value = (gamma - 1) * (gbar - 1) / (gbar - gamma) * (gamma ** n - gbar ** n)
        return mpmath.re(value) + base


def amplitude_and_phase(cls: IsogenyClass) -> Tuple[float, float]:
    """(2 sqrt((q+1-a)/(4q-a^2)), arctan((a-2)/sqrt(4q-a^2)))."""
    if cls.case.is_double_zero:
        raise DoubleZero(f"{cls.label()} has a double inverse zero; use the linear-growth form")
    disc = cls.discriminant
    amplitude = 2.0 * math.sqrt((cls.q.q + 1 - cls.a) / disc)
    omega = math.atan((cls.a - 2) / math.sqrt(disc))
    return amplitude, omega
