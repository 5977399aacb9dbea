from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from golomb.errors import (
    InconsistentValuesError,
    InsufficientPointsError,
    LeadingCoefficientError,
)
from golomb.quasipolynomial import (
    Quasipolynomial,
    golomb_quasipolynomial,
    interpolate,
    reciprocity_check_golomb,
)
from golomb.rulers import count_golomb_rulers

# the m=3 counting quasipolynomial, period 12, constant term first
G3_CONSTITUENTS = {
    0: (F(10), F(-4), F(1, 2)),
    1: (F(5, 2), F(-3), F(1, 2)),
    2: (F(6), F(-4), F(1, 2)),
    3: (F(9, 2), F(-3), F(1, 2)),
    4: (F(8), F(-4), F(1, 2)),
    5: (F(5, 2), F(-3), F(1, 2)),
    6: (F(8), F(-4), F(1, 2)),
    7: (F(5, 2), F(-3), F(1, 2)),
    8: (F(8), F(-4), F(1, 2)),
    9: (F(9, 2), F(-3), F(1, 2)),
    10: (F(6), F(-4), F(1, 2)),
    11: (F(5, 2), F(-3), F(1, 2)),
}


def test_interpolate_constant():
    q = interpolate({1: 7, 2: 7, 3: 7}, degree=0, period=1)
    assert q.constituents == ((F(7),),)
    assert q.evaluate(100) == 7


def test_interpolate_g2_by_hand():
    # counts 0, 0, 2, 2 at t = 1..4: odd lengths give t-1, even give t-2
    q = interpolate({1: 0, 2: 0, 3: 2, 4: 2}, degree=1, period=2)
    assert q.constituents[1] == (F(-1), F(1))
    assert q.constituents[0] == (F(-2), F(1))


def test_interpolate_insufficient_points_names_class():
    with pytest.raises(InsufficientPointsError) as info:
        interpolate({1: 0, 3: 2, 4: 2}, degree=1, period=2)
    assert info.value.residue == 0
    assert info.value.need == 2


def test_interpolate_inconsistent_surplus():
    with pytest.raises(InconsistentValuesError) as info:
        interpolate({2: 0, 4: 2, 1: 1, 3: 2, 5: 99}, degree=1, period=2)
    assert info.value.residue == 1
    assert info.value.t == 5


def test_interpolate_rejects_nonpositive_arguments():
    with pytest.raises(ValueError):
        interpolate({0: 1, 1: 1}, degree=0, period=1)


def test_evaluate_reproduces_samples():
    values = {t: count_golomb_rulers(3, t) for t in range(1, 37)}
    q = interpolate(values, degree=2, period=12)
    for t, v in values.items():
        assert q.evaluate(t) == v


def test_negative_arguments_use_nonnegative_residues():
    q = golomb_quasipolynomial(3)
    # -1 lands in residue class 11
    assert q.evaluate(-1) == F(1, 2) + 3 + F(5, 2) == 6
    assert q.evaluate(-13) == q.constituents[11][0] - 13 * q.constituents[11][1] + 169 * q.constituents[11][2]


def test_golomb_quasipolynomial_m3_closed_form():
    q = golomb_quasipolynomial(3)
    assert q.period == 12
    for r, coeffs in G3_CONSTITUENTS.items():
        assert q.constituents[r] == coeffs
    assert q.evaluate(0) == 10
    assert q.minimal_period() == 12


def test_golomb_quasipolynomial_small_m():
    q1 = golomb_quasipolynomial(1)
    assert q1.period == 1 and q1.constituents == ((F(1),),)
    q2 = golomb_quasipolynomial(2)
    assert q2.period == 2
    assert q2.constituents[1] == (F(-1), F(1))
    assert q2.constituents[0] == (F(-2), F(1))


def test_leading_coefficients():
    for m in (1, 2, 3):
        q = golomb_quasipolynomial(m)
        expected = F(1, [1, 1, 2][m - 1])
        assert all(c[-1] == expected for c in q.constituents)


def test_wrong_period_hypothesis_is_diagnosed():
    # period 5 does not divide into the true period 12; the residue classes
    # then mix incompatible counts and interpolation cannot stay consistent
    with pytest.raises((LeadingCoefficientError, InconsistentValuesError)):
        golomb_quasipolynomial(3, period_hint=5)


def test_m3_coefficient_symmetries():
    q = golomb_quasipolynomial(3)
    # the linear coefficient has period 2
    for r in range(12):
        assert q.constituents[r][1] == q.constituents[(r + 2) % 12][1]
    # the constant term agrees at residues r and -r
    for r in range(12):
        assert q.constituents[r][0] == q.constituents[(-r) % 12][0]


def test_quasipolynomial_matches_brute_force_on_held_out_lengths():
    for m in (1, 2, 3):
        q = golomb_quasipolynomial(m)
        used = q.period * m
        for t in range(used + 1, used + 2 * q.period + 1):
            assert q.evaluate(t) == count_golomb_rulers(m, t)


def test_json_round_trip_is_exact():
    q = golomb_quasipolynomial(3)
    again = Quasipolynomial.from_json(q.to_json())
    assert again == q
    assert again.to_json() == q.to_json()
    assert q.to_json_dict()["constituents"][0] == ["10", "-4", "1/2"]


@given(
    period=st.integers(min_value=1, max_value=3),
    degree=st.integers(min_value=0, max_value=2),
    data=st.data(),
)
def test_interpolation_recovers_random_quasipolynomials(period, degree, data):
    coeff = st.fractions(min_value=-20, max_value=20, max_denominator=4)
    constituents = tuple(
        tuple(data.draw(coeff) for _ in range(degree + 1)) for _ in range(period)
    )
    q = Quasipolynomial(period, constituents)
    samples = {}
    t = 1
    while any(
        sum(1 for s in samples if s % period == r) < degree + 1 for r in range(period)
    ):
        samples[t] = q.evaluate(t)
        t += 1
    rebuilt = interpolate(samples, degree, period)
    assert rebuilt == q


def test_reciprocity_m2():
    report = reciprocity_check_golomb(2, range(0, 9))
    assert report.ok
    by_t = {row.t: row for row in report.rows}
    assert by_t[0].lhs == by_t[0].rhs == 2
    # lengths 4: rulers (0,4),(1,3),(3,1),(4,0) once each and (2,2) twice
    assert by_t[4].lhs == by_t[4].rhs == 6


def test_reciprocity_m3_at_zero():
    report = reciprocity_check_golomb(3, [0])
    assert report.ok and report.rows[0].rhs == 10


def test_reciprocity_m1():
    report = reciprocity_check_golomb(1, range(1, 6))
    assert report.ok
    assert all(row.lhs == row.rhs == 1 for row in report.rows)
