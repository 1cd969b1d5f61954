"""Truncated power series as coefficient lists (index = degree)."""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import List, Sequence, TypeVar

Num = TypeVar("Num", int, Fraction)


def mul_trunc(a: Sequence[Num], b: Sequence[Num], n: int) -> List[Num]:
    """Product of a and b, keeping degrees 0..n."""
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if not x:
            continue
        for j, y in enumerate(b[: n + 1 - i]):
            out[i + j] += x * y
    return out


def binomial_power(d: int, e: int, n: int) -> List[int]:
    """(1 - u^d)^e truncated at degree n, for any integer e.

    Negative e uses the multiset expansion (1 - u^d)^(-b) = sum C(b+j-1, j) u^(dj).
    """
    out = [0] * (n + 1)
    for j in range(n // d + 1):
        if e >= 0:
            c = (-1) ** j * comb(e, j)
        else:
            c = comb(-e + j - 1, j)
        out[d * j] = c
    return out


def exp_trunc(a: Sequence[Fraction], n: int) -> List[Fraction]:
    """exp(A(u)) truncated at degree n, for A with zero constant term.

    Uses E' = A' E, i.e. k e_k = sum_{j=1..k} j a_j e_{k-j}.
    """
    if a and a[0]:
        raise ValueError("exp_trunc needs a series with zero constant term")
    e = [Fraction(0)] * (n + 1)
    e[0] = Fraction(1)
    for k in range(1, n + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if j < len(a) and a[j]:
                acc += j * a[j] * e[k - j]
        e[k] = acc / k
    return e


def prefix_sums(coeffs: Sequence[int]) -> List[int]:
    """[c_0, c_0 + c_1, ...]."""
    out = []
    total = 0
    for c in coeffs:
        total += c
        out.append(total)
    return out
