import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from mertens_ec.errors import DoubleZero
from mertens_ec.isogeny import admissible_classes, classify, prime_powers_up_to
from mertens_ec.mobius import (
    amplitude_and_phase,
    closed_form_coefficient,
    closed_form_ratio,
    closed_form_ratio_mp,
    mertens_sums,
    mobius_coefficients,
    signed_ratio,
)
from mertens_ec.surd import Surd

CLASSES = [cls for q in prime_powers_up_to(49) for cls in admissible_classes(q)]
SIMPLE_ZERO_CLASSES = [cls for q in prime_powers_up_to(64) for cls in admissible_classes(q) if not cls.case.is_double_zero]


@pytest.mark.parametrize(
    "q, a, coeffs",
    [
        (3, 3, [1, -1, -3, -6, -9, -9]),
        (5, 0, [1, -6, 0, 30, 0, -150]),
        (2, 2, [1, -1, -2, -2, 0, 4]),
    ],
)
def test_mobius_coefficient_examples(q, a, coeffs):
    series = mobius_coefficients(classify(q, a), len(coeffs) - 1)
    assert series.coeffs == coeffs
    assert len(series) == len(coeffs)


def test_zero_truncation():
    assert mobius_coefficients(classify(2, 0), 0).coeffs == [1]
    with pytest.raises(ValueError):
        mobius_coefficients(classify(2, 0), -1)


def test_first_coefficient_is_minus_point_count():
    for cls in CLASSES:
        c = mobius_coefficients(cls, 1).coeffs
        assert c[0] == 1
        assert c[1] == -(cls.q.q + 1 - cls.a)


@given(st.sampled_from(CLASSES), st.integers(min_value=0, max_value=60))
def test_coefficients_obey_residue_bound(cls, n):
    q = cls.q.q
    c = mobius_coefficients(cls, n).coeffs[n]
    bound = (1 + math.sqrt(q)) ** 2 * (n + 1) * q ** ((n - 1) / 2) + (1 if n == 0 else 0)
    assert abs(c) <= bound * (1 + 1e-12)


@pytest.mark.parametrize(
    "q, a, sums",
    [
        (2, 2, [1, 0, -2, -4, -4, 0, 8]),
        (3, -3, [1, -6, 15, -27, 36]),
        (4, 4, [1, 0, -4, -16]),
        (3, 3, [1, 0, -3, -9, -18, -27]),
    ],
)
def test_mertens_sum_examples(q, a, sums):
    traj = mertens_sums(classify(q, a), len(sums))
    assert traj.sums == sums
    assert traj.at(1) == 1


def test_trajectory_ratios():
    traj = mertens_sums(classify(2, 2), 8)
    assert traj.ratio(4) == -1.0
    assert traj.ratio(2) == 0.0
    assert math.isclose(traj.ratio(3), -1 / math.sqrt(2))
    assert traj.exact_ratio(3) == Surd.of(Fraction(-1, 2), 2)
    assert traj.rows()[0] == {"X": 1, "M": 1, "ratio": traj.ratio(1)}
    with pytest.raises(ValueError):
        mertens_sums(classify(2, 2), 0)


@given(st.sampled_from(CLASSES), st.integers(min_value=1, max_value=200))
def test_ratio_sign_and_size(cls, x):
    traj = mertens_sums(cls, x)
    m, r = traj.sums[-1], traj.ratios[-1]
    assert (m > 0) == (r > 0) and (m < 0) == (r < 0)
    if m:
        assert math.isclose(r * r, m * m / cls.q.q ** x, rel_tol=1e-12)


def test_signed_ratio_of_large_integers():
    # exact integers beyond float range before the division
    q, x = 2, 3000
    assert signed_ratio(-(2 ** 1500), q, x) == -1.0


@pytest.mark.parametrize("q, a", [(2, -1), (2, 1), (3, -2), (5, -1)])
def test_long_trajectory_ratios(q, a):
    # M(X) leaves float range near X = 2050 for q = 2
    cls = classify(q, a)
    traj = mertens_sums(cls, 3000)
    amplitude, _ = amplitude_and_phase(cls)
    assert max(abs(m) for m in traj.sums).bit_length() > 1100
    assert all(abs(r) <= amplitude + 1e-9 for r in traj.ratios)
    assert all((m > 0) == (r > 0) for m, r in zip(traj.sums, traj.ratios) if m)


@pytest.mark.parametrize(
    "q, a, x, expected",
    [
        (5, 2, 3, -11 / 5 ** 1.5),
        (4, 4, 2, 0.0),
        (9, 0, 2, -1.0),
        (4, -4, 3, 3.5),
    ],
)
def test_closed_form_examples(q, a, x, expected):
    assert math.isclose(closed_form_ratio(classify(q, a), x), expected, rel_tol=1e-9, abs_tol=1e-12)


def test_closed_form_rejects_zero():
    with pytest.raises(ValueError):
        closed_form_ratio(classify(2, 2), 0)


@given(st.sampled_from(CLASSES), st.integers(min_value=1, max_value=300))
def test_closed_form_agrees_with_exact_sums(cls, x):
    exact = mertens_sums(cls, x).ratios[-1]
    assert math.isclose(closed_form_ratio(cls, x), exact, rel_tol=1e-9, abs_tol=1e-9)


def test_double_zero_grows_linearly():
    for q in (4, 9, 16, 25):
        root = math.isqrt(q)
        up = classify(q, 2 * root)
        down = classify(q, -2 * root)
        for x in range(1, 40):
            assert math.isclose(closed_form_ratio(up, x), 1 - (1 - 1 / root) * x, abs_tol=1e-12)
            sign = (-1) ** x
            assert math.isclose(closed_form_ratio(down, x), -sign * (1 + 1 / root) * x + sign, abs_tol=1e-12)


@pytest.mark.parametrize("q, a, n_max", [(2, 2, 20), (9, 3, 18), (4, 4, 15), (4, -4, 15), (7, -5, 20), (27, 9, 12)])
def test_closed_form_coefficient(q, a, n_max):
    cls = classify(q, a)
    exact = mobius_coefficients(cls, n_max).coeffs
    for n, c in enumerate(exact):
        value = closed_form_coefficient(cls, n)
        assert abs(value - c) < mpmath.mpf(10) ** -20 * max(1, abs(c)), (n, c, value)


def test_amplitude_examples():
    amplitude, _ = amplitude_and_phase(classify(2, -1))
    assert math.isclose(amplitude, 4 / math.sqrt(7))
    for q in (3, 5, 7, 11, 13):
        amplitude, omega = amplitude_and_phase(classify(q, 2))
        assert math.isclose(amplitude, 1.0)
        assert omega == 0.0
    with pytest.raises(DoubleZero):
        amplitude_and_phase(classify(4, 4))


def test_amplitude_phase_form_matches_closed_form():
    for cls in CLASSES:
        if cls.case.is_double_zero:
            continue
        amplitude, omega = amplitude_and_phase(cls)
        for x in range(1, 30):
            assert math.isclose(
                amplitude * math.cos(x * cls.theta + omega), closed_form_ratio(cls, x), abs_tol=1e-9
            )


def test_high_precision_closed_form():
    cls = classify(9, -3)
    value = closed_form_ratio_mp(cls, 2, dps=60)
    with mpmath.workdps(60):
        assert abs(value - (-1 - mpmath.mpf(1) / 3)) < mpmath.mpf(10) ** -55


@settings(max_examples=1000)
@given(st.sampled_from(SIMPLE_ZERO_CLASSES), st.integers(min_value=1, max_value=200))
def test_amplitude_phase_identity(cls, x):
    amplitude, omega = amplitude_and_phase(cls)
    slope = (cls.a - 2) / math.sqrt(cls.discriminant)
    expanded = math.cos(x * cls.theta) - slope * math.sin(x * cls.theta)
    assert math.isclose(amplitude * math.cos(x * cls.theta + omega), expanded, rel_tol=0, abs_tol=1e-12)


@pytest.mark.parametrize("q", [4, 9, 16, 25, 49, 64])
@pytest.mark.parametrize("sign", [1, -1])
def test_double_zero_growth_bound_on_exact_sums(q, sign):
    # |M(X)| / q^{X/2} >= (1 - 1/r) X - 1 with r = sqrt(q), compared as integers
    root = math.isqrt(q)
    cls = classify(q, sign * 2 * root)
    assert cls.case.is_double_zero
    for x, m in enumerate(mertens_sums(cls, 100).sums, start=1):
        t = (root - 1) * x - root
        if t > 0:
            assert m * m * root * root >= t * t * q ** x, x
