from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from evoalg import linalg
from evoalg.errors import DimensionMismatch, MixedFields
from evoalg.scalars import GF, QQ
from evoalg.linalg import Subspace


def naive_rank(rows):
    """Rank by plain forward elimination on Fractions, no pivot bookkeeping shared with linalg."""
    m = [[Fraction(a) for a in r] for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        for i in range(rank + 1, len(m)):
            f = m[i][c] / m[rank][c]
            m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_rref_known_example():
    red, piv = linalg.rref_pivots([[QQ(2), QQ(4), QQ(2)], [QQ(1), QQ(3), QQ(2)], [QQ(3), QQ(7), QQ(4)]])
    assert piv == [0, 1]
    assert red == [[1, 0, -1], [0, 1, 1]]


def test_rref_keeps_row_count():
    out = linalg.rref([[QQ(1), QQ(2)], [QQ(2), QQ(4)]])
    assert out == [[1, 2], [0, 0]]


small = st.integers(min_value=-4, max_value=4)


@settings(max_examples=150)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_rank_matches_naive_elimination(r, c, data):
    rows = [[QQ(data.draw(small)) for _ in range(c)] for _ in range(r)]
    assert linalg.rank(rows) == naive_rank(rows)


@settings(max_examples=150)
@given(st.integers(1, 4), st.integers(1, 5), st.data())
def test_kernel_is_kernel(r, c, data):
    rows = [[QQ(data.draw(small)) for _ in range(c)] for _ in range(r)]
    K = linalg.kernel(QQ, rows, c)
    assert K.dim == c - linalg.rank(rows)
    for x in K.rows:
        for row in rows:
            assert sum(a * b for a, b in zip(row, x)) == 0


def test_left_kernel():
    rows = [[QQ(1), QQ(1)], [QQ(2), QQ(2)], [QQ(0), QQ(1)]]
    L = linalg.left_kernel(QQ, rows)
    assert L.dim == 1
    (y,) = L.rows
    assert linalg.mat_vec(y, rows) == (0, 0)


def test_inverse():
    F = GF(7)
    m = [[F(2), F(1)], [F(5), F(3)]]
    inv = linalg.inverse(F, m)
    assert linalg.mat_mul(m, inv) == linalg.identity(F, 2)
    with pytest.raises(ValueError):
        linalg.inverse(F, [[F(1), F(2)], [F(2), F(4)]])


def subspaces_st(F, n):
    coeff = st.integers(0, 6) if F.is_finite else small
    return st.lists(st.lists(coeff, min_size=n, max_size=n), max_size=n + 1).map(
        lambda rows: Subspace.span(F, n, rows)
    )


@settings(max_examples=200)
@given(st.sampled_from([QQ, GF(3), GF(5)]), st.integers(1, 4), st.data())
def test_grassmann_identity(F, n, data):
    A = data.draw(subspaces_st(F, n))
    B = data.draw(subspaces_st(F, n))
    assert (A + B).dim + (A & B).dim == A.dim + B.dim
    assert A.contains(A & B) and B.contains(A & B)
    assert (A + B).contains(A) and (A + B).contains(B)


@settings(max_examples=100)
@given(st.integers(1, 4), st.data())
def test_canonical_form_is_basis_independent(n, data):
    A = data.draw(subspaces_st(QQ, n))
    if A.is_zero():
        return
    # a random invertible recombination of the basis gives the same canonical rows
    mix = [[QQ(data.draw(small)) for _ in range(A.dim)] for _ in range(A.dim)]
    if linalg.rank(mix) < A.dim:
        return
    B = Subspace.span(QQ, n, linalg.mat_mul(mix, A.rows))
    assert B == A and B.rows == A.rows


def test_intersection_brute_force_gf3():
    F = GF(3)
    A = Subspace.span(F, 3, [[1, 1, 0], [0, 0, 1]])
    B = Subspace.span(F, 3, [[1, 0, 0], [0, 1, 1]])
    pts = [tuple(F(a) for a in v) for v in product(range(3), repeat=3)]
    common = [v for v in pts if v in A and v in B]
    assert len(common) == 3 ** (A & B).dim
    assert all(v in (A & B) for v in common)


def test_reduce_and_coordinates():
    A = Subspace.span(QQ, 3, [[1, 1, 0]])
    r = A.reduce((QQ(2), QQ(3), QQ(1)))
    assert r == (0, 1, 1)
    assert A.coordinates((QQ(3), QQ(3), QQ(0))) == (3,)
    with pytest.raises(ValueError):
        A.coordinates((QQ(1), QQ(0), QQ(0)))


def test_coordinate_and_support():
    A = Subspace.coordinate(QQ, 4, [2, 0])
    assert A.rows == ((1, 0, 0, 0), (0, 0, 1, 0))
    assert A.support() == {0, 2}
    assert Subspace.span(QQ, 3, [[1, -1, 0]]).support() == {0, 1}


def test_errors():
    with pytest.raises(DimensionMismatch):
        Subspace.span(QQ, 2, [[1, 2, 3]])
    with pytest.raises(DimensionMismatch):
        Subspace.zero(QQ, 2) + Subspace.zero(QQ, 3)
    with pytest.raises(MixedFields):
        Subspace.full(QQ, 2) & Subspace.full(GF(3), 2)


def test_equality_and_order():
    A = Subspace.span(QQ, 2, [[2, 2]])
    B = Subspace.span(QQ, 2, [[-1, -1]])
    assert A == B and hash(A) == hash(B)
    assert A < Subspace.full(QQ, 2)
    assert not A < A
    assert Subspace.zero(QQ, 2) <= A
