from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from plethcount.ehrhart import (
    Quasipolynomial,
    asymptotics_check,
    degree_check,
    degree_formula,
    evaluate,
    fit,
    fits_for,
    free_cell_orbits,
    interpolate,
    parity_check,
    reciprocity_check,
    sum_quasipolynomial,
)
from plethcount.errors import FitError, GuardExceeded
from plethcount.partitions import partitions_of


def symmetric_3x3(m):
    """Symmetric 3x3 matrices with row sums m: off-diagonal (x, y, w) with pairwise sums <= m."""
    return sum(
        1
        for x in range(m + 1)
        for y in range(m + 1 - x)
        for w in range(m + 1 - max(x, y))
    )


@given(st.lists(st.fractions(), min_size=1, max_size=6))
def test_interpolate_recovers_polynomial(coeffs):
    xs = list(range(-2, len(coeffs) - 2))
    ys = [sum(c * x**k for k, c in enumerate(coeffs)) for x in xs]
    got = interpolate(xs, ys)
    assert got == list(coeffs) + [0] * (len(got) - len(coeffs))


def test_degree_formula_values():
    assert degree_formula([1, 1]) == 1
    assert degree_formula([2]) == 0
    assert degree_formula([3]) == 1
    assert degree_formula([2, 1]) == 1
    assert degree_formula([1] * 4) == 6
    assert degree_formula([6]) == 2
    assert degree_formula([2, 2]) == 2


def test_cell_orbit_bound_dominates_degree():
    for n in range(1, 7):
        for rho in partitions_of(n):
            assert degree_formula(rho) <= free_cell_orbits(rho)


def test_fit_two_by_two():
    assert fit([1, 1]) == Quasipolynomial(1, ((1, 1),))
    assert fit([2]) == Quasipolynomial(2, ((1,), (0,)))


def test_fit_symmetric_3x3_against_direct_count():
    q = fit([1, 1, 1])
    assert q.degree == 3
    for m in range(0, 40):
        assert evaluate(q, m) == symmetric_3x3(m)


def test_fit_n4_identity_leading_coefficient():
    q = fit([1, 1, 1, 1])
    assert q.degree == 6
    assert set(q.leading_coefficients()) == {F(1, 72)}


def test_fit_guards():
    with pytest.raises(GuardExceeded):
        fit([1, 1, 1, 1], max_sample_m=10)
    with pytest.raises(FitError):
        fit([2], max_period=1)


def test_quasipolynomial_arithmetic():
    a = Quasipolynomial(2, ((1,), (0,)))
    b = Quasipolynomial(3, ((0, 1), (1, 1), (2, 1)))
    s = a + b
    assert s.period == 6
    for m in range(-12, 12):
        assert s(m) == a(m) + b(m)
        assert (s - b)(m) == a(m)
        assert (3 * a)(m) == 3 * a(m)
    assert (s - b).reduced() == a
    assert (a - a).is_zero()
    assert (a - a).degree == 0


def test_quasipolynomial_json_round_trip():
    q = fit([2, 1])
    data = q.to_json()
    assert data["period"] == 4
    assert all(isinstance(c, str) and "/" in c for row in data["constituents"] for c in row)
    assert Quasipolynomial.from_json(data) == q
    with pytest.raises(ValueError):
        Quasipolynomial.from_json({**data, "degree": data["degree"] + 1})


def test_quasipolynomial_validation():
    with pytest.raises(ValueError):
        Quasipolynomial(2, ((1,),))
    with pytest.raises(ValueError):
        Quasipolynomial(2, ((1,), (0,))).with_period(3)


@pytest.mark.parametrize("n", range(1, 31))
def test_degree_parity(n):
    assert all(parity_check(rho) for rho in partitions_of(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_reciprocity(n):
    assert reciprocity_check(n, range(0, 11))


def test_reciprocity_detects_a_wrong_fit():
    fits = dict(fits_for(2))
    fits[(1, 1)] = Quasipolynomial(1, ((2, 1),))
    assert not reciprocity_check(2, range(0, 3), fits)


@pytest.mark.parametrize("n", range(1, 5))
def test_asymptotics(n):
    assert asymptotics_check(n)


def test_sum_quasipolynomial_small():
    # s_1[s_m] = s_m always has one constituent
    one = sum_quasipolynomial([1]).reduced()
    assert one == Quasipolynomial(1, ((1,),))
    # s_2[s_m] = sum of s_{2m-2k,2k}, k = 0..floor(m/2)
    two = sum_quasipolynomial([2])
    for m in range(0, 20):
        assert two(m) == m // 2 + 1
    # s_11[s_m] = sum of s_{2m-2k-1,2k+1}: floor((m+1)/2)
    for m in range(0, 20):
        assert sum_quasipolynomial([1, 1])(m) == (m + 1) // 2


@pytest.mark.parametrize("rho", [(2, 1), (3,), (2, 2), (3, 1)])
def test_degree_check_on_fresh_points(rho):
    r = degree_check(rho)
    assert r, r.witness
    assert r.details["fresh"][0] > 0
