"""L-polynomial, extension point counts and closed-point counts of E/F_q."""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import List, Tuple

from .errors import ConsistencyError
from .finite_field import prime_factors
from .isogeny import IsogenyClass
from .series import binomial_power, mul_trunc


def mobius_mu(n: int) -> int:
    """Classical Moebius function."""
    if n < 1:
        raise ValueError("mu is defined on positive integers")
    sign = 1
    for p in prime_factors(n):
        n //= p
        if n % p == 0:
            return 0
        sign = -sign
    return sign


def divisors(n: int) -> List[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class LPolynomial:
    coeff0: int
    coeff1: int
    coeff2: int

    @property
    def a(self) -> int:
        return -self.coeff1

    @property
    def q(self) -> int:
        return self.coeff2

    @property
    def discriminant(self) -> int:
        return self.coeff1 * self.coeff1 - 4 * self.coeff0 * self.coeff2

    @property
    def class_number(self) -> int:
        """P(1) = q + 1 - a, the number of rational points."""
        return self.coeff0 + self.coeff1 + self.coeff2

    def __call__(self, u):
        return self.coeff0 + self.coeff1 * u + self.coeff2 * u * u

    def inverse_zeroes(self) -> Tuple[complex, complex]:
        """(gamma_1, gamma_2) with gamma_1 * gamma_2 = q, gamma_1 + gamma_2 = a, Im gamma_1 >= 0."""
        root = cmath.sqrt(self.discriminant)
        g1 = (self.a + root) / 2
        g2 = (self.a - root) / 2
        if g1.imag < 0:
            g1, g2 = g2, g1
        return g1, g2

    def reciprocal_coefficients(self, n: int) -> List[int]:
        """s_0..s_n with 1/P(u) = sum s_N u^N: s_0 = 1, s_1 = a, s_N = a s_{N-1} - q s_{N-2}."""
        s = [1]
        if n >= 1:
            s.append(self.a)
        for _ in range(2, n + 1):
            s.append(self.a * s[-1] - self.q * s[-2])
        return s

    def __str__(self) -> str:
        if self.a == 0:
            return f"1 + {self.q}u^2"
        return f"1 {'-' if self.a > 0 else '+'} {abs(self.a)}u + {self.q}u^2"


def l_polynomial(cls: IsogenyClass) -> LPolynomial:
    return LPolynomial(1, -cls.a, cls.q.q)


@dataclass(frozen=True)
class ExtensionCounts:
    traces: List[int]
    points: List[int]
    closed_points: List[int]

    def rows(self) -> List[dict]:
        return [
            {"n": k + 1, "trace": t, "points": n, "closed_points": b}
            for k, (t, n, b) in enumerate(zip(self.traces, self.points, self.closed_points))
        ]


def frobenius_traces(a: int, q: int, n_max: int) -> List[int]:
    """a_1..a_n with a_k = gamma_1^k + gamma_2^k, via a_{k+1} = a a_k - q a_{k-1}."""
    prev, cur = 2, a
    out = []
    for _ in range(n_max):
        out.append(cur)
        prev, cur = cur, a * cur - q * prev
    return out


def extension_counts(cls: IsogenyClass, n_max: int) -> ExtensionCounts:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    q = cls.q.q
    traces = frobenius_traces(cls.a, q, n_max)
    points = [q ** k + 1 - t for k, t in enumerate(traces, start=1)]
    closed = []
    for d in range(1, n_max + 1):
        total = sum(mobius_mu(d // e) * points[e - 1] for e in divisors(d))
        b, rem = divmod(total, d)
        if rem or b < 0:
            raise ConsistencyError(f"{cls.label()}: closed-point count b_{d} = {total}/{d} is not a natural number")
        closed.append(b)
    return ExtensionCounts(traces=traces, points=points, closed_points=closed)


def effective_divisor_counts(cls: IsogenyClass, n_max: int) -> List[int]:
    """A_0..A_n, coefficients of Z(u) = P(u) / ((1 - u)(1 - qu))."""
    q = cls.q.q
    geometric = [(q ** (k + 1) - 1) // (q - 1) for k in range(n_max + 1)]  # 1/((1-u)(1-qu))
    return mul_trunc([1, -cls.a, q], geometric, n_max)


def euler_product(closed_points: List[int], n_max: int, sign: int) -> List[int]:
    """prod_d (1 - u^d)^(sign * b_d) truncated at degree n_max."""
    out = [1] + [0] * n_max
    for d, b in enumerate(closed_points[:n_max], start=1):
        if b:
            out = mul_trunc(out, binomial_power(d, sign * b, n_max), n_max)
    return out


def trace_float(cls: IsogenyClass, k: int) -> float:
    """2 q^{k/2} cos(k theta), the float counterpart of frobenius_traces."""
    return 2.0 * cls.q.q ** (k / 2.0) * math.cos(k * cls.theta)
