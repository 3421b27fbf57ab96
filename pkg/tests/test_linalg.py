from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st
from sympy import GF
from sympy import QQ as SQQ
from sympy.polys.matrices import DomainMatrix

from hochster.linalg import QQ, ExactField, SparseMatrix, compose, homology_dims, rank

PRIMES = [2, 3, 32003]


def oracle_rank(dense, p=0):
    if not dense or not dense[0]:
        return 0
    dom = SQQ if p == 0 else GF(p)
    return DomainMatrix([[dom(int(x)) for x in row] for row in dense], (len(dense), len(dense[0])), dom).rank()


dense_matrices = st.integers(0, 7).flatmap(
    lambda r: st.integers(0, 7).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def sparse(dense):
    return SparseMatrix.from_dense(dense) if dense else SparseMatrix(0, 0)


@settings(max_examples=150, deadline=None)
@given(dense_matrices)
def test_rank_matches_dense_oracle(dense):
    M = sparse(dense)
    assert rank(M, QQ) == oracle_rank(dense)
    for p in PRIMES:
        assert rank(M, ExactField(p)) == oracle_rank(dense, p)


@settings(max_examples=100, deadline=None)
@given(dense_matrices)
def test_rank_of_transpose(dense):
    M = sparse(dense)
    for f in (QQ, ExactField(2)):
        assert rank(M.transpose(), f) == rank(M, f)


@settings(max_examples=100, deadline=None)
@given(dense_matrices)
def test_mod_p_rank_never_exceeds_rational_rank(dense):
    M = sparse(dense)
    for p in PRIMES:
        assert rank(M, ExactField(p)) <= rank(M, QQ)


@settings(max_examples=100, deadline=None)
@given(dense_matrices, st.randoms(use_true_random=False))
def test_rank_is_permutation_invariant(dense, rnd):
    M = sparse(dense)
    rp, cp = list(range(M.nrows)), list(range(M.ncols))
    rnd.shuffle(rp)
    rnd.shuffle(cp)
    assert rank(M.permuted(rp, cp)) == rank(M)


def test_rational_entries_and_large_prime():
    M = SparseMatrix.from_dense([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(M) == 1
    assert rank(M, ExactField(32003)) == 1


def test_rank_over_small_primes_differs():
    M = SparseMatrix.from_dense([[2, 0], [0, 3]])
    assert rank(M, QQ) == 2
    assert rank(M, ExactField(2)) == 1
    assert rank(M, ExactField(3)) == 1


def test_zero_sized_matrices():
    assert rank(SparseMatrix(0, 5)) == 0
    assert rank(SparseMatrix(4, 0)) == 0
    assert rank(SparseMatrix(3, 3)) == 0


def test_field_validation():
    with pytest.raises(ValueError):
        ExactField(4)
    with pytest.raises(ValueError):
        ExactField(-3)
    assert str(ExactField(0)) == "QQ"
    assert str(ExactField(5)) == "ZZ/5"


def test_matrix_validation():
    with pytest.raises(ValueError):
        SparseMatrix(1, 2, [{0: 0}])
    with pytest.raises(ValueError):
        SparseMatrix(1, 2, [{2: 1}])
    with pytest.raises(ValueError):
        SparseMatrix.from_entries(2, 2, [(0, 0, 1), (0, 0, 2)])


def test_compose_and_homology():
    # interval: two vertices joined by an edge, boundary rows are edges
    d1 = SparseMatrix.from_dense([[-1, 1]])  # C_1 -> C_0
    d0 = SparseMatrix.from_dense([[1], [1]])  # C_0 -> C_{-1} (augmentation)
    assert compose(d1, d0).nnz == 0
    assert homology_dims(d1, d0) == 0
    bad = SparseMatrix.from_dense([[1, 1]])
    with pytest.raises(AssertionError):
        homology_dims(bad, d0)


def test_homology_shape_mismatch():
    with pytest.raises(ValueError):
        homology_dims(SparseMatrix(1, 3), SparseMatrix(2, 1))
