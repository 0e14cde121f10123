import random

import pytest
from hypothesis import given, settings, strategies as st

from mgbounds.corpus import presentation_corpus, random_presentation
from mgbounds.linalg import GF, QQ, Matrix, rank
from mgbounds.matroid import circuits, mask
from mgbounds.module import (NegativeDegrees, Presentation, PresentationError, add,
                             coefficient_matroid, degree_box, determining_degree,
                             fraction_field_rank, fraction_field_rank_by_minors,
                             from_monomial_ideal, graded_piece, module_rank,
                             multiplication_map, require_valid, shift, unit, validate)
from mgbounds.genex import GenexSpec, generic_presentation


def r_mod_xy():
    return Presentation.build(2, [(0, 0)], [(1, 0), (0, 1)], [[1, 1]])


def r_mod_m2():
    return from_monomial_ideal(2, [(2, 0), (1, 1), (0, 2)])


def column_xy():
    # Phi = (x, y)^T
    return Presentation.build(2, [(0, 1), (1, 0)], [(1, 1)], [[1], [1]])


def kinds(P):
    return [(v.kind, v.t, v.j) for v in validate(P)]


def test_validate_examples():
    assert validate(r_mod_xy()) == []
    assert kinds(Presentation.build(2, [(0, 0)], [(0, 0), (0, 1)], [[1, 1]])) == [("NonMinimal", 0, 0)]
    assert kinds(Presentation.build(2, [(0, 1)], [(1, 0)], [[1]])) == [("Homogeneity", 0, 0)]
    assert kinds(Presentation.build(2, [(0, 0)], [(1, 0), (0, 1)], [[1, 0]])) == [("ZeroColumn", None, 1)]
    bad = Presentation(2, QQ, ((0, 0),), ((1, 0),), Matrix.zeros(QQ, 2, 1))
    assert kinds(bad)[0][0] == "DimensionMismatch"
    assert kinds(Presentation.build(2, [(0,)], [(1, 0)], [[1]]))[0][0] == "DimensionMismatch"
    with pytest.raises(PresentationError):
        require_valid(bad)


def test_coefficient_matroid():
    M = coefficient_matroid(r_mod_m2())
    assert M.r == 1 and circuits(M) == [mask([0, 1]), mask([0, 2]), mask([1, 2])]
    M = coefficient_matroid(r_mod_xy())
    assert (M.n, M.r) == (2, 1)
    M = coefficient_matroid(generic_presentation(GenexSpec(2, 5)))
    assert M.r == 2 and len(circuits(M)) == 10


def test_ranks():
    assert fraction_field_rank(r_mod_xy()) == 1
    assert fraction_field_rank(column_xy()) == 1
    assert fraction_field_rank(generic_presentation(GenexSpec(2, 5))) == 2
    assert module_rank(r_mod_xy()) == 0
    assert module_rank(column_xy()) == 1
    free = Presentation.build(2, [(0, 0), (1, 0)], [], [[], []])
    assert module_rank(free) == 2


def test_graded_pieces():
    P = r_mod_m2()
    assert graded_piece(P, (1, 0)).dim == 1
    assert graded_piece(P, (1, 1)).dim == 0
    assert graded_piece(P, (0, 0)).dim == 1
    assert graded_piece(shift(P, (2, 2)), (1, 1)).dim == 0
    assert graded_piece(P, (-1, 0)).dim == 0
    piece = graded_piece(column_xy(), (1, 1))
    assert piece.labels == ((0, (1, 0)), (1, (0, 1)))
    assert piece.dim == 1


def test_multiplication_maps():
    R1 = Presentation.build(1, [(0,)], [], [[]])
    assert multiplication_map(R1, (0,), 0) == Matrix.identity(QQ, 1)
    assert multiplication_map(r_mod_m2(), (1, 0), 0).shape == (0, 1)
    for j in range(2):
        assert multiplication_map(r_mod_xy(), (0, 0), j).is_zero()


def test_determining_degree_and_shift():
    assert determining_degree(r_mod_m2()) == (2, 2)
    assert determining_degree(r_mod_xy()) == (1, 1)
    k11 = Presentation.build(2, [(1, 1)], [(2, 1), (1, 2)], [[1, 1]])
    assert determining_degree(k11) == (2, 2)
    assert shift(r_mod_xy(), (0, 0)) == r_mod_xy()
    assert shift(r_mod_xy(), (1, 1)) == k11
    with pytest.raises(NegativeDegrees):
        determining_degree(shift(r_mod_xy(), (-1, 0)))


def test_from_monomial_ideal():
    P = from_monomial_ideal(2, [(2, 0), (1, 1), (0, 2)])
    assert P.coeffs.tolist() == [[1, 1, 1]] and P.row_degrees == ((0, 0),)
    assert from_monomial_ideal(1, [(1,), (2,)]).col_degrees == ((1,),)
    P = from_monomial_ideal(2, [])
    assert (P.beta0, P.beta1) == (1, 0)
    P = from_monomial_ideal(2, [(0, 0), (1, 0)])
    assert (P.beta0, P.beta1) == (0, 0)


def test_rank_cross_check_by_minors():
    for P in presentation_corpus(60, seed=11):
        if P.beta1 <= 6:
            assert fraction_field_rank_by_minors(P) == fraction_field_rank(P) == rank(P.coeffs)


def corpus():
    return presentation_corpus(25, seed=4)


@pytest.mark.parametrize("P", corpus())
def test_piece_invariants(P):
    a = determining_degree(P)
    m = P.nvars
    hi = tuple(x + 1 for x in a)
    for b in degree_box((0,) * m, hi):
        piece = graded_piece(P, b)
        assert piece.dim <= sum(1 for g in P.row_degrees if all(x <= y for x, y in zip(g, b)))
        for i in range(m):
            for j in range(i + 1, m):
                left = multiplication_map(P, add(b, unit(m, i)), j) @ multiplication_map(P, b, i)
                right = multiplication_map(P, add(b, unit(m, j)), i) @ multiplication_map(P, b, j)
                assert left == right
        for j in range(m):
            if b[j] >= a[j]:
                X = multiplication_map(P, b, j)
                assert X.nrows == X.ncols == rank(X)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2 ** 31), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_shift_equivariance(seed, c):
    P = random_presentation(random.Random(seed), GF(7))
    if validate(P):
        return
    c = tuple(c[:P.nvars])
    Q = shift(P, c)
    assert determining_degree(Q) == add(determining_degree(P), c)
    for b in degree_box((0,) * P.nvars, determining_degree(P)):
        assert graded_piece(Q, add(b, c)).dim == graded_piece(P, b).dim
