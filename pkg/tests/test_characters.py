from fractions import Fraction
from math import factorial

import pytest

from plethcount.characters import (
    CharacterContext,
    ClassFunction,
    character_table_csv,
    hook_length_dimension,
    inner_product,
    irreducible_character,
    sign_character,
    sqrt_count,
    theta_identity_check,
    trivial_character,
)
from plethcount.errors import GuardExceeded
from plethcount.partitions import Partition, Permutation, partitions_of, representative, z

# Character table of S_3, rows/columns in descending lex order.
S3 = {
    (3,): {(3,): 1, (2, 1): 1, (1, 1, 1): 1},
    (2, 1): {(3,): -1, (2, 1): 0, (1, 1, 1): 2},
    (1, 1, 1): {(3,): 1, (2, 1): -1, (1, 1, 1): 1},
}

# Selected entries of the S_5 table, from the standard printed table.
S5_ENTRIES = [
    ((3, 2), (1, 1, 1, 1, 1), 5),
    ((3, 2), (2, 2, 1), 1),
    ((3, 2), (5,), 0),
    ((3, 1, 1), (1, 1, 1, 1, 1), 6),
    ((3, 1, 1), (3, 1, 1), 0),
    ((3, 1, 1), (5,), 1),
    ((2, 2, 1), (3, 2), -1),
]


def test_s3_table():
    ctx = CharacterContext()
    assert ctx.table(3) == S3


@pytest.mark.parametrize("lam, rho, value", S5_ENTRIES)
def test_s5_entries(lam, rho, value):
    assert irreducible_character(lam)(rho) == value


@pytest.mark.parametrize("n", range(1, 10))
def test_dimension_matches_hook_length(n):
    ones = [1] * n
    dims = [irreducible_character(lam)(ones) for lam in partitions_of(n)]
    assert dims == [hook_length_dimension(lam) for lam in partitions_of(n)]
    assert sum(d * d for d in dims) == factorial(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_row_orthogonality(n):
    chars = [irreducible_character(lam) for lam in partitions_of(n)]
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert inner_product(a, b) == (1 if i == j else 0)


@pytest.mark.parametrize("n", range(1, 8))
def test_column_orthogonality(n):
    parts = partitions_of(n)
    for rho in parts:
        for sigma in parts:
            s = sum(irreducible_character(lam)(rho) * irreducible_character(lam)(sigma) for lam in parts)
            assert s == (z(rho) if rho == sigma else 0)


def test_trivial_and_sign():
    for n in range(1, 7):
        assert irreducible_character([n]) == trivial_character(n)
        assert irreducible_character([1] * n) == sign_character(n)


def test_conjugate_shape_twists_by_sign():
    for n in range(1, 8):
        for lam in partitions_of(n):
            assert irreducible_character(lam.conjugate()) == irreducible_character(lam) * sign_character(n)


def test_class_function_needs_every_class():
    with pytest.raises(ValueError):
        ClassFunction(2, {(2,): 1})
    f = ClassFunction.constant(3, Fraction(1, 2))
    assert not f.is_integral()
    assert (f + f) == ClassFunction.constant(3, 1)
    assert [rho for rho, _ in f.items()] == partitions_of(3)
    with pytest.raises(ValueError):
        f + ClassFunction.constant(2)


def test_csv_layout():
    text = character_table_csv(3)
    assert text.splitlines() == ["lambda,3,\"2,1\",\"1,1,1\"", "3,1,1,1", "\"2,1\",-1,0,2", "\"1,1,1\",1,-1,1"]


def test_size_mismatch_rejected():
    with pytest.raises(ValueError):
        CharacterContext().value([2, 1], [2])


# number of involutions (including 1) in S_k
INVOLUTIONS = [1, 1, 2, 4, 10, 26, 76, 232, 764]


@pytest.mark.parametrize("k", range(1, 7))
def test_sqrt_of_identity_counts_involutions(k):
    assert sqrt_count(Permutation.identity(k)) == INVOLUTIONS[k]


def test_sqrt_counts_small_cases():
    # (12): tau^2 is never a transposition
    assert sqrt_count(representative([2])) == 0
    # (123) = (132)^2 and nothing else
    assert sqrt_count(representative([3])) == 1
    # (12)(34) = (1324)^2 = (1423)^2
    assert sqrt_count(representative([2, 2])) == 2


@pytest.mark.parametrize("k", range(1, 7))
def test_theta_identity(k):
    assert theta_identity_check(k)


def test_sqrt_guard():
    with pytest.raises(GuardExceeded):
        sqrt_count(Permutation.identity(9))
