import math
from fractions import Fraction

import pytest

from mertens_ec.errors import HasseViolation, Inadmissible, NotPrimePower
from mertens_ec.isogeny import (
    CaseTag,
    RationalAngle,
    admissible_classes,
    admissible_traces,
    classify,
    frobenius_angle,
    hasse_range,
    matching_cases,
    prime_powers_up_to,
)


def test_classify_examples():
    cls = classify(2, 2)
    assert cls.case.tag is CaseTag.C4i
    assert math.isclose(cls.theta, math.pi / 4)
    assert str(cls.case.theta_kind) == "pi/4"

    cls = classify(7, 3)
    assert cls.case.tag is CaseTag.C1
    assert not cls.case.is_rational
    assert cls.period is None


def test_inadmissible_reason():
    with pytest.raises(Inadmissible, match="p ≡ 1 \\(mod 4\\) with m even"):
        classify(25, 0)
    with pytest.raises(Inadmissible, match="mod 3"):
        classify(49, 7)


def test_hasse_violation():
    with pytest.raises(HasseViolation):
        classify(5, 5)


def test_not_prime_power():
    with pytest.raises(NotPrimePower):
        classify(6, 1)


@pytest.mark.parametrize(
    "q, expected",
    [
        (2, [-2, -1, 0, 1, 2]),
        (3, [-3, -2, -1, 0, 1, 2, 3]),
        (4, [-4, -3, -2, -1, 0, 1, 2, 3, 4]),
        (5, [-4, -3, -2, -1, 0, 1, 2, 3, 4]),
        (25, [-10, -9, -8, -7, -6, -5, -4, -3, -2, -1, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]),
    ],
)
def test_admissible_traces(q, expected):
    assert admissible_traces(q) == expected


@pytest.mark.parametrize(
    "q, a, angle",
    [
        (4, 2, math.pi / 3),
        (9, 0, math.pi / 2),
        (2, -2, 3 * math.pi / 4),
        (4, -4, math.pi),
        (4, 4, 0.0),
        (3, 3, math.pi / 6),
        (3, -3, 5 * math.pi / 6),
        (9, -3, 2 * math.pi / 3),
    ],
)
def test_rational_angles(q, a, angle):
    assert math.isclose(frobenius_angle(q, a), angle, abs_tol=1e-15)


def test_angle_strings():
    assert str(RationalAngle(0, 1)) == "0"
    assert str(RationalAngle(1, 1)) == "pi"
    assert str(RationalAngle(3, 4)) == "3pi/4"
    assert RationalAngle(5, 6).over_pi == Fraction(5, 6)


def test_periods():
    assert classify(2, 2).period == 8
    assert classify(9, 0).period == 4
    assert classify(3, 3).period == 12
    assert classify(9, -3).period == 6
    assert classify(4, 4).period == 2


def test_cases_are_mutually_exclusive():
    for q in prime_powers_up_to(2 ** 12):
        for a in hasse_range(q):
            assert len(matching_cases(q, a)) <= 1, (q.q, a)


def test_symmetry_and_zero_trace():
    for q in prime_powers_up_to(512):
        traces = admissible_traces(q)
        assert traces == sorted(-a for a in traces)
        if q.m % 2 == 1:
            assert 0 in traces


def test_theta_strictly_decreasing():
    for q in prime_powers_up_to(128):
        thetas = [cls.theta for cls in admissible_classes(q)]
        assert all(x > y for x, y in zip(thetas, thetas[1:])), q.q
        assert all(0.0 <= t <= math.pi for t in thetas)


def test_discriminant_vanishes_only_for_double_zero():
    for q in prime_powers_up_to(64):
        for cls in admissible_classes(q):
            assert (cls.discriminant == 0) == cls.case.is_double_zero
