from itertools import combinations

import pytest

from mgbounds.genex import (FieldTooSmall, GenexSpec, NotUniform, generic_presentation,
                            is_uniform, verify_sharpness)
from mgbounds.koszul import betti_table, euler_characteristic
from mgbounds.linalg import GF
from mgbounds.matroid import mask, members, tflats_of_level
from mgbounds.module import Presentation, coefficient_matroid, from_monomial_ideal, join, module_rank


def test_construction_examples():
    P = generic_presentation(GenexSpec(1, 2))
    assert P.col_degrees == ((2, 1), (1, 2)) and P.coeffs.tolist() == [[1, 1]]
    assert betti_table(P).entries == betti_table(from_monomial_ideal(2, [(2, 1), (1, 2)])).entries
    P = generic_presentation(GenexSpec(1, 3))
    assert P.col_degrees == ((2, 1, 1), (1, 2, 1), (1, 1, 2)) and P.row_degrees == ((0, 0, 0),)
    P = generic_presentation(GenexSpec(2, 3))
    assert P.coeffs.tolist() == [[1, 1, 1], [0, 1, 2]]
    assert P.col_degrees == ((2, 1, 1), (1, 2, 1), (1, 1, 2))


def test_parameter_checks():
    with pytest.raises(FieldTooSmall):
        generic_presentation(GenexSpec(2, 5, GF(5)))
    with pytest.raises(ValueError):
        generic_presentation(GenexSpec(0, 3))
    with pytest.raises(ValueError):
        generic_presentation(GenexSpec(4, 3))
    assert generic_presentation(GenexSpec(2, 4, GF(5))).field == GF(5)


@pytest.mark.parametrize("r,n,expected", [
    (1, 3, [1, 3, 3, 1]),
    (2, 3, [2, 3, 1]),
    (2, 5, [2, 5, 10, 10, 3]),
])
def test_sharpness(r, n, expected):
    rep = verify_sharpness(generic_presentation(GenexSpec(r, n)))
    assert rep.passed
    assert [v for v in rep.values if v] == expected
    assert all(c.equal for c in rep.checks)


@pytest.mark.parametrize("r,n", [(1, 2), (1, 4), (2, 4), (3, 4), (3, 5), (2, 3)])
def test_uniform_and_euler(r, n):
    P = generic_presentation(GenexSpec(r, n))
    M = coefficient_matroid(P)
    assert all(M.rank(mask(c)) == r for c in combinations(range(n), r))
    # every (r+1)-subset is dependent
    assert all(M.rank(mask(c)) == r for c in combinations(range(n), r + 1))
    assert module_rank(P) == 0
    assert euler_characteristic(betti_table(P)) == 0


@pytest.mark.parametrize("r,n,K", [(1, 3, 1), (2, 4, 1), (2, 4, 2), (3, 5, 1)])
def test_tflat_degrees_are_injective(r, n, K):
    P = generic_presentation(GenexSpec(r, n, spike=K))
    M = coefficient_matroid(P)
    seen = {}
    tflats = [I for k in range(n) for I in tflats_of_level(M, k)]
    for I in tflats:
        deg = join([P.col_degrees[j] for j in members(I)], n)
        assert deg not in seen
        seen[deg] = I
    for I in tflats:
        for J in tflats:
            if J != I and J & I == J:
                dI = join([P.col_degrees[j] for j in members(I)], n)
                dJ = join([P.col_degrees[j] for j in members(J)], n)
                assert all(x <= y for x, y in zip(dJ, dI)) and dJ != dI


def test_seeded_mode_and_other_fields():
    for seed in range(3):
        P = generic_presentation(GenexSpec(2, 4, GF(10007)), seed=seed)
        assert is_uniform(P)
        assert verify_sharpness(P).passed
    P = generic_presentation(GenexSpec(2, 4, spike=2))
    assert verify_sharpness(P).passed


def test_not_uniform_rejected():
    P = from_monomial_ideal(2, [(1, 0), (0, 1)])
    assert is_uniform(P)
    Q = Presentation.build(2, [(0, 0), (0, 0)], [(1, 0), (0, 1), (1, 1)], [[1, 0, 1], [0, 1, 0]])
    with pytest.raises(NotUniform):
        verify_sharpness(Q)
