"""Bound verdicts, limsups, residue tables, conjecture checks and witness searches."""
from __future__ import annotations

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Iterable, List, Optional, Union

import mpmath
import pandas as pd

from .config import DEFAULT_CONFIG
from .errors import ConsistencyError, DoubleZero, InvalidEpsilon, NotPeriodic
from .finite_field import PrimePower
from .isogeny import IsogenyClass, admissible_classes, classify, prime_powers_up_to
from .mobius import closed_form_ratio_mp, mertens_sums, mobius_coefficients
from .surd import Surd, working_precision

log = logging.getLogger("mertens.verdict")

INFINITE = math.inf

SWEEP_COLUMNS = ["q", "p", "m", "a", "case", "theta", "holds", "condition", "limsup", "first_violation"]


@dataclass(frozen=True)
class RatioProfile:
    cls: IsogenyClass
    period: int
    values: List[Surd]
    max_abs: float

    @property
    def max_abs_squared(self) -> Fraction:
        return max(v.square for v in self.values)

    @property
    def argmax_residues(self) -> List[int]:
        top = self.max_abs_squared
        return [r for r, v in enumerate(self.values) if v.square == top]

    def value_at(self, x: int) -> Surd:
        return self.values[x % self.period]

    def rows(self) -> List[dict]:
        return [{"residue": r, "value": v} for r, v in enumerate(self.values)]


@dataclass(frozen=True)
class Verdict:
    cls: IsogenyClass
    holds: bool
    matched_condition: Optional[str]
    limsup: float
    limsup_squared: Optional[Fraction]

    @property
    def limsup_is_infinite(self) -> bool:
        return math.isinf(self.limsup)


@dataclass(frozen=True)
class ConjectureScan:
    cls: IsogenyClass
    x_max: int
    first_violation: Optional[int]
    last_violation: Optional[int]
    violation_count: int

    @property
    def recurs(self) -> bool:
        """More than one violation in the scanned range."""
        return self.violation_count > 1


def residue_table(cls: IsogenyClass, dps: Optional[int] = None) -> RatioProfile:
    """Exact M(X)/q^{X/2} for each residue X mod 2n, where theta = k*pi/n."""
    if cls.case.is_double_zero:
        raise DoubleZero(f"{cls.label()} grows linearly; there is no periodic table")
    if not cls.case.is_rational:
        raise NotPeriodic(f"{cls.label()} has an irrational Frobenius angle")
    period = cls.period
    dps = dps or DEFAULT_CONFIG.precision.dps
    traj = mertens_sums(cls, period)
    values = [traj.exact_ratio(period if r == 0 else r) for r in range(period)]

    tol = mpmath.mpf(10) ** (-(dps - 10))
    for r, v in enumerate(values):
        x = period if r == 0 else r
        with working_precision(dps):
            gap = abs(v.to_mpf(dps) - closed_form_ratio_mp(cls, x, dps))
        if gap > tol:
            log.warning("%s residue %d: exact %s disagrees with closed form by %s", cls.label(), r, v, gap)
            raise ConsistencyError(f"{cls.label()}: residue {r} disagrees with the closed form")

    top = max(v.square for v in values)
    return RatioProfile(cls=cls, period=period, values=values, max_abs=math.sqrt(top))


def limsup_squared(cls: IsogenyClass, dps: Optional[int] = None) -> Optional[Fraction]:
    """Exact limsup^2; None when the limsup is infinite."""
    if cls.case.is_double_zero:
        return None
    if cls.case.is_rational:
        return residue_table(cls, dps).max_abs_squared
    # amplitude^2 = 4(q + 1 - a) / (4q - a^2)
    return Fraction(4 * (cls.q.q + 1 - cls.a), cls.discriminant)


def limsup_ratio(cls: IsogenyClass, dps: Optional[int] = None) -> float:
    sq = limsup_squared(cls, dps)
    return INFINITE if sq is None else math.sqrt(sq)


def theorem_condition(cls: IsogenyClass) -> Optional[str]:
    """The condition (T1, T2, T3) under which the bound holds, if the class matches one."""
    p, m, a = cls.p, cls.m, cls.a
    if a == 2 and (p != 2 or m == 1):
        return "T1"
    if m % 2 == 0 and a == cls.q.sqrt and p % 3 != 1:
        return "T2"
    if a == 0:
        return "T3"
    return None


def verdict(q: Union[int, PrimePower], a: int, dps: Optional[int] = None) -> Verdict:
    cls = classify(q, a)
    condition = theorem_condition(cls)
    sq = limsup_squared(cls, dps)
    bounded = sq is not None and sq <= 1
    if bounded != (condition is not None):
        log.warning("%s: condition %s but limsup^2 %s", cls.label(), condition, sq)
        raise ConsistencyError(f"{cls.label()}: bound condition and limsup disagree")
    return Verdict(
        cls=cls,
        holds=condition is not None,
        matched_condition=condition,
        limsup=INFINITE if sq is None else math.sqrt(sq),
        limsup_squared=sq,
    )


def _scan_sums(cls: IsogenyClass, x_max: int) -> Iterable[tuple]:
    """Yield (X, M(X), q^X) for X = 1..x_max with exact integers."""
    q = cls.q.q
    coeffs = mobius_coefficients(cls, x_max - 1).coeffs
    total, power = 0, 1
    for x, c in enumerate(coeffs, start=1):
        total += c
        power *= q
        yield x, total, power


def conjecture_scan(cls: IsogenyClass, x_max: int) -> ConjectureScan:
    if x_max < 1:
        raise ValueError("x_max must be at least 1")
    first = last = None
    count = 0
    for x, total, power in _scan_sums(cls, x_max):
        if total * total > power:
            count += 1
            last = x
            if first is None:
                first = x
    return ConjectureScan(cls=cls, x_max=x_max, first_violation=first, last_violation=last, violation_count=count)


def conjecture_check_exact(cls: IsogenyClass, x_max: int) -> Optional[int]:
    """Smallest X <= x_max with M(X)^2 > q^X, or None."""
    if x_max < 1:
        raise ValueError("x_max must be at least 1")
    for x, total, power in _scan_sums(cls, x_max):
        if total * total > power:
            return x
    return None


def parse_epsilon(epsilon: Union[str, Fraction, Decimal, float]) -> Fraction:
    try:
        value = Fraction(Decimal(str(epsilon))) if not isinstance(epsilon, Fraction) else epsilon
    except (InvalidOperation, ValueError, OverflowError):
        raise InvalidEpsilon(f"epsilon {epsilon!r} is not a decimal number") from None
    if not 0 < value < 1:
        raise InvalidEpsilon(f"epsilon must lie in (0, 1), got {epsilon}")
    return value


def witness_search(cls: IsogenyClass, epsilon, x_max: int) -> List[int]:
    """All X <= x_max with |M(X)| > (1 - epsilon) q^{X/2}, compared exactly."""
    eps = parse_epsilon(epsilon)
    threshold = (1 - eps) ** 2
    num, den = threshold.numerator, threshold.denominator
    return [x for x, total, power in _scan_sums(cls, x_max) if total * total * den > num * power]


def equality_residues(cls: IsogenyClass, dps: Optional[int] = None) -> List[int]:
    """Residues X mod period where |M(X)| = q^{X/2} exactly."""
    profile = residue_table(cls, dps)
    return [r for r, v in enumerate(profile.values) if v.square == 1]


def _sweep_rows(q: PrimePower, x_max: int, dps: Optional[int]) -> List[dict]:
    rows = []
    for cls in admissible_classes(q):
        v = verdict(q, cls.a, dps)
        rows.append(
            {
                "q": q.q,
                "p": q.p,
                "m": q.m,
                "a": cls.a,
                "case": cls.case.tag.value,
                "theta": cls.theta,
                "holds": v.holds,
                "condition": v.matched_condition,
                "limsup": v.limsup,
                "first_violation": conjecture_check_exact(cls, x_max),
            }
        )
    log.debug("q=%d: %d classes, %d hold", q.q, len(rows), sum(r["holds"] for r in rows))
    return rows


def sweep(q_max: int, x_max: int, threads: Optional[int] = None, dps: Optional[int] = None) -> pd.DataFrame:
    """Bound verdicts for every admissible (q, a) with q <= q_max, ordered by (q, a)."""
    orders = prime_powers_up_to(q_max)
    rows: List[dict] = []
    if threads == 1:
        for q in orders:
            rows.extend(_sweep_rows(q, x_max, dps))
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(lambda q: _sweep_rows(q, x_max, dps), orders):
                rows.extend(chunk)
    df = pd.DataFrame(rows, columns=SWEEP_COLUMNS)
    if df.empty:
        return df
    df["first_violation"] = df["first_violation"].astype("Int64")
    return df.sort_values(["q", "a"]).reset_index(drop=True)
