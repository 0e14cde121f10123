from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from mgbounds.linalg import (GF, QQ, Matrix, field_from_json, is_prime, kernel_basis,
                             quotient_space, rank, rref)


def M(rows, field=QQ, ncols=None):
    return Matrix.from_rows(field, rows, ncols=ncols)


def test_scalars_normalized():
    assert QQ.parse("-4/6") == Fraction(-2, 3)
    F = GF(7)
    assert F.coerce(-1) == 6
    assert F.parse("1/2") == 4
    assert F.coerce(Fraction(3, 5)) == 3 * pow(5, -1, 7) % 7


def test_prime_field_rejects_composites():
    assert not is_prime(10003)  # 7 * 1429
    assert is_prime(10007)
    with pytest.raises(ValueError):
        GF(10003)
    assert field_from_json({"fp": 5}) == GF(5)
    assert field_from_json("q") is QQ


@pytest.mark.parametrize("rows, expected", [
    ([[1, 0], [0, 1]], 2),
    ([[1, 2], [2, 4]], 1),
    ([[1, 1, 1, 1], [0, 1, 2, 3]], 2),
])
def test_rank_examples(rows, expected):
    assert rank(M(rows)) == expected
    assert rank(M(rows, GF(10007))) == expected


def test_empty_matrices_have_rank_zero():
    assert rank(Matrix.zeros(QQ, 0, 3)) == 0
    assert rank(Matrix.zeros(QQ, 3, 0)) == 0
    assert kernel_basis(Matrix.zeros(QQ, 0, 3)).shape == (3, 3)


def test_rank_depends_on_field():
    A = M([[1, 1], [1, -1]])
    assert rank(A) == 2
    assert rank(M([[1, 1], [1, -1]], GF(2))) == 1


def test_kernel_examples():
    assert kernel_basis(Matrix.identity(QQ, 2)).ncols == 0
    K = kernel_basis(M([[1, 1]]))
    assert K.tolist() == [[-1], [1]]
    K = kernel_basis(M([[1, 2], [2, 4]]))
    # (-2, 1) spans the same line as (2, -1)
    assert K.tolist() == [[-2], [1]]


def test_quotient_examples():
    assert quotient_space(Matrix.identity(QQ, 2)).dim == 0
    Q = quotient_space(M([[1], [1]]))
    assert Q.dim == 1 and Q.pivot_tags == (1,)
    Q = quotient_space(M([[1, 2], [2, 4]]))
    assert Q.dim == 1
    assert quotient_space(Matrix.zeros(QQ, 3, 0)).dim == 3


def rref_rank(A):
    return len(rref(A)[1])


fields = st.sampled_from([QQ, GF(2), GF(5), GF(10007)])
entries = st.integers(min_value=-3, max_value=3)


@st.composite
def matrices(draw, max_dim=5):
    F = draw(fields)
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    rows = draw(st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r))
    if F is QQ and draw(st.booleans()):
        den = draw(st.integers(1, 4))
        rows = [[Fraction(x, den) for x in row] for row in rows]
    return Matrix.from_rows(F, rows, ncols=c)


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_rank_properties(A):
    assert rank(A) == rank(A.transpose())
    # Bareiss over Q against plain Gauss-Jordan
    assert rank(A) == rref_rank(A)
    K = kernel_basis(A)
    assert K.ncols + rank(A) == A.ncols
    if K.ncols:
        assert (A @ K).is_zero()
        assert rank(K) == K.ncols


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_quotient_properties(R):
    Q = quotient_space(R)
    assert Q.dim == R.nrows - rank(R)
    assert (Q.projection @ Q.section) == Matrix.identity(R.field, Q.dim)
    if R.ncols and Q.dim:
        assert (Q.projection @ R).is_zero()
    assert list(Q.pivot_tags) == sorted(set(Q.pivot_tags))
    assert quotient_space(R) == Q
