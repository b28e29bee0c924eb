import itertools
import random
from fractions import Fraction

import pytest

from cyclicsb.matrices import (
    det_int,
    identity_int,
    inverse_rational,
    inverse_unimodular,
    kernel_dimension,
    matmul_int,
    rank_over_field,
)
from cyclicsb.scalars import CyclotomicElement


def det_by_permutation_expansion(m):
    """Independent determinant oracle: sum over permutations."""
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = list(perm)
        # count inversions for the sign
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if seen[i] > seen[j])
        sign = -1 if inv % 2 else 1
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def test_det_known_values():
    assert det_int([]) == 1
    assert det_int([[7]]) == 7
    assert det_int([[0, 1], [-1, 1]]) == 1
    assert det_int([[2, 0], [0, 2]]) == 4
    assert det_int([[1, 1], [1, 1]]) == 0


def test_det_matches_permutation_expansion():
    rng = random.Random(42)
    for n in (2, 3, 4):
        for _ in range(30):
            m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            assert det_int(m) == det_by_permutation_expansion(m)


def test_det_rejects_non_square():
    with pytest.raises(ValueError):
        det_int([[1, 2, 3], [4, 5, 6]])


def test_inverse_rational_round_trip():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 4)
        while True:
            m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            if det_int(m) != 0:
                break
        inv = inverse_rational(m)
        prod = [[sum(Fraction(m[i][t]) * inv[t][j] for t in range(n))
                 for j in range(n)] for i in range(n)]
        assert prod == [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def test_inverse_rational_singular_raises():
    with pytest.raises(ZeroDivisionError):
        inverse_rational([[1, 2], [2, 4]])


def test_inverse_unimodular():
    m = [[0, 1], [-1, 1]]
    inv = inverse_unimodular(m)
    assert matmul_int(m, inv) == identity_int(2)
    assert all(isinstance(x, int) for row in inv for x in row)


def test_inverse_unimodular_rejects_other_determinants():
    with pytest.raises(ValueError):
        inverse_unimodular([[2, 0], [0, 1]])


def test_rank_over_rationals():
    assert rank_over_field([[Fraction(1), Fraction(2)],
                            [Fraction(2), Fraction(4)]]) == 1
    assert rank_over_field([[Fraction(1), Fraction(0)],
                            [Fraction(0), Fraction(1)]]) == 2
    assert rank_over_field([]) == 0


def test_rank_over_cyclotomic_field():
    z = CyclotomicElement.zeta(5)
    one = CyclotomicElement.one(5)
    zero = CyclotomicElement.zero(5)
    # second row is z times the first: rank 1
    assert rank_over_field([[one, z], [z, z * z]]) == 1
    assert rank_over_field([[one, zero], [z, one]]) == 2


def test_kernel_dimension():
    assert kernel_dimension([], 3) == 3
    assert kernel_dimension([[Fraction(1), Fraction(1)]], 2) == 1
    rows = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
    assert kernel_dimension(rows, 2) == 0
