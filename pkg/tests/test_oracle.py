from fractions import Fraction

import pytest

from plethcount.characters import hook_length_dimension
from plethcount.errors import GuardExceeded
from plethcount.matrices import plethysm_sum
from plethcount.oracle import (
    PSymFunc,
    dimension_identity,
    multiply,
    oracle_sum,
    p_plethysm,
    plethysm_expansion,
    plethysm_schur,
    power_product_constituents,
    schur_in_p,
    schur_pairing,
)
from plethcount.partitions import partitions_of

# Hand-known plethysms (zero multiplicities omitted).
KNOWN = {
    ((1,), 4): {(4,): 1},
    ((2,), 2): {(4,): 1, (2, 2): 1},
    ((1, 1), 2): {(3, 1): 1},
    ((2,), 3): {(6,): 1, (4, 2): 1},
    ((1, 1), 3): {(5, 1): 1, (3, 3): 1},
    ((3,), 2): {(6,): 1, (4, 2): 1, (2, 2, 2): 1},
    ((3,), 3): {(9,): 1, (7, 2): 1, (6, 3): 1, (5, 2, 2): 1, (4, 4, 1): 1},
}


@pytest.mark.parametrize("lam, m", list(KNOWN))
def test_known_plethysms(lam, m):
    assert dict(plethysm_schur(lam, m).coefficients) == KNOWN[(lam, m)]


def test_schur_in_p_small():
    assert schur_in_p([2]) == PSymFunc({(1, 1): Fraction(1, 2), (2,): Fraction(1, 2)})
    assert schur_in_p([1, 1]) == PSymFunc({(1, 1): Fraction(1, 2), (2,): Fraction(-1, 2)})


@pytest.mark.parametrize("n", range(1, 7))
def test_schur_pairing_is_dual(n):
    for lam in partitions_of(n):
        got = schur_pairing(schur_in_p(lam))
        assert got == {nu: (1 if nu == lam else 0) for nu in partitions_of(n)}


def test_p_plethysm_and_multiply():
    g = PSymFunc({(2, 1): 3})
    assert p_plethysm(2, g) == PSymFunc({(4, 2): 3})
    assert multiply(g, PSymFunc({(1,): 2})) == PSymFunc({(2, 1, 1): 6})
    with pytest.raises(ValueError):
        p_plethysm(0, g)


def test_psym_homogeneity():
    with pytest.raises(ValueError):
        PSymFunc({(2,): 1, (1,): 1})
    with pytest.raises(ValueError):
        PSymFunc({(2,): 1}, degree=3)
    assert PSymFunc({(2,): 1, (1, 1): 0}).terms == {(2,): 1}


@pytest.mark.parametrize("lam, m", [((2,), 3), ((2, 1), 2), ((3,), 3), ((2, 2), 2), ((1, 1, 1), 4)])
def test_dimension_identity(lam, m):
    lhs, rhs = dimension_identity(plethysm_schur(lam, m))
    assert lhs == rhs


def test_power_product_constituents():
    # (s_m)^2 = s_{2m} + s_{2m-1,1} + ... + s_{m,m}
    for m in range(1, 6):
        assert power_product_constituents(2, m) == m + 1


def test_oracle_splits_the_power_product():
    # s_m^n is the sum over lam of dim(lam) * s_lam[s_m]
    for n, m in [(2, 3), (3, 2), (3, 3), (4, 2)]:
        total = sum(hook_length_dimension(lam) * oracle_sum(lam, m) for lam in partitions_of(n))
        assert total == power_product_constituents(n, m)


@pytest.mark.parametrize("n, m", [(2, 5), (3, 4), (4, 3)])
def test_oracle_agrees_with_matrix_count(n, m):
    for lam in partitions_of(n):
        assert oracle_sum(lam, m) == plethysm_sum(lam, m)


def test_guard():
    with pytest.raises(GuardExceeded):
        plethysm_expansion([2, 2], 4)


def test_bad_inputs():
    with pytest.raises(ValueError):
        plethysm_schur([2], 0)
