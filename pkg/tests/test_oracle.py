import pytest

from mertens_ec.errors import FieldTooLarge, RangeExceeded, SingularCurve
from mertens_ec.finite_field import field_of_order, make_field
from mertens_ec.isogeny import admissible_classes, admissible_traces, classify, prime_powers_up_to
from mertens_ec.mobius import mobius_coefficients
from mertens_ec.oracle import WeierstrassCurve, count_points, product_oracle, trace_census


@pytest.mark.parametrize(
    "q, coeffs, n1, trace",
    [
        (2, dict(a3=1), 3, 0),                # y^2 + y = x^3
        (3, dict(a4=1), 4, 0),                # y^2 = x^3 + x
        (5, dict(a4=-1, a6=1), 8, -2),        # y^2 = x^3 - x + 1
    ],
)
def test_count_points_examples(q, coeffs, n1, trace):
    curve = WeierstrassCurve.from_ints(field_of_order(q), **coeffs)
    assert count_points(curve) == (n1, trace)


def test_singular_curve():
    curve = WeierstrassCurve.from_ints(make_field(5))  # y^2 = x^3
    assert curve.is_singular()
    with pytest.raises(SingularCurve):
        count_points(curve)


def test_discriminant_short_form():
    # y^2 = x^3 + a4 x + a6 has discriminant -16(4 a4^3 + 27 a6^2)
    f = make_field(7)
    for a4 in range(7):
        for a6 in range(7):
            curve = WeierstrassCurve.from_ints(f, a4=a4, a6=a6)
            assert curve.discriminant == f(-16 * (4 * a4 ** 3 + 27 * a6 ** 2))


def test_points_satisfy_hasse_bound_in_char_2():
    f = make_field(2, 2)
    for a6 in f.elements():
        if a6.is_zero():
            continue
        curve = WeierstrassCurve(f, f.one, f.zero, f.zero, f.zero, a6)  # y^2 + xy = x^3 + a6
        n1, trace = count_points(curve)
        assert trace * trace <= 16


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7])
def test_census_realises_every_admissible_trace(q):
    census = trace_census(q, threads=2)
    assert census.realized_traces == admissible_traces(q)
    assert census.curve_count == sum(census.counts.values())


def test_census_examples():
    assert trace_census(2).realized_traces == [-2, -1, 0, 1, 2]
    assert trace_census(4).realized_traces == list(range(-4, 5))
    assert trace_census(5).realized_traces == [-4, -3, -2, -1, 0, 1, 2, 3, 4]


def test_census_counts_nonsingular_curves():
    # over F_2 exactly half of the 32 long Weierstrass equations are nonsingular
    census = trace_census(2)
    assert census.curve_count == 16


def test_census_frame():
    df = trace_census(3).to_frame()
    assert list(df.columns) == ["trace", "curves", "admissible"]
    assert df.admissible.all()
    assert df.trace.tolist() == [-3, -2, -1, 0, 1, 2, 3]


def test_census_cap():
    with pytest.raises(FieldTooLarge):
        trace_census(32)
    with pytest.raises(FieldTooLarge):
        trace_census(9, max_order=8)


@pytest.mark.slow
@pytest.mark.parametrize("q", [8, 9, 11, 13, 16])
def test_census_larger_fields(q):
    assert trace_census(q).realized_traces == admissible_traces(q)


@pytest.mark.parametrize(
    "q, a, n_max, expected",
    [
        (2, 2, 3, [1, -1, -2, -2]),
        (3, 0, 2, [1, -4, 0]),
        (5, 2, 0, [1]),
    ],
)
def test_product_oracle_examples(q, a, n_max, expected):
    assert product_oracle(classify(q, a), n_max) == expected


def test_product_oracle_matches_recurrence():
    for q in prime_powers_up_to(9):
        for cls in admissible_classes(q):
            assert product_oracle(cls, 12) == mobius_coefficients(cls, 12).coeffs, cls.label()


def test_product_oracle_cap():
    with pytest.raises(RangeExceeded):
        product_oracle(classify(2, 2), 65)
    with pytest.raises(RangeExceeded):
        product_oracle(classify(2, 2), 10, max_degree=8)
    with pytest.raises(ValueError):
        product_oracle(classify(2, 2), -1)
