import pytest
from hypothesis import given, settings, strategies as st

from conftest import complexes
from hochster.catalog import cross_polytope_boundary, delta_family, injective_words, running_example
from hochster.cohomology import (
    coboundary,
    euler_from_cohomology,
    is_cohen_macaulay,
    poset_is_cohen_macaulay,
    reduced_cohomology,
    reduced_homology,
)
from hochster.complex import SimplicialComplex, induced, reduced_euler_characteristic, skeleton
from hochster.linalg import ExactField, SparseMatrix, compose, homology_dims, rank

K = running_example().complex
SQUARE = SimplicialComplex.from_faces(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
RP2 = SimplicialComplex.from_faces(
    6,
    [(1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6), (2, 3, 5), (2, 4, 5), (2, 4, 6), (3, 4, 6), (3, 5, 6)],
)


def test_small_linear_algebra_examples():
    assert rank(SparseMatrix(3, 4)) == 0
    assert rank(SparseMatrix.identity(5)) == 5
    assert rank(coboundary(SQUARE, 0)) == 3
    assert homology_dims(SparseMatrix(0, 3), SparseMatrix(3, 0)) == 3
    assert homology_dims(coboundary(SQUARE, -1), coboundary(SQUARE, 0)) == 0


def test_coboundary_squares_to_zero():
    for i in range(-1, K.dim - 1):
        assert compose(coboundary(K, i), coboundary(K, i + 1)).nnz == 0


def test_reduced_cohomology_examples():
    assert reduced_cohomology(SimplicialComplex.empty(0)) == [1]
    assert reduced_cohomology(SimplicialComplex.void(3)) == []
    assert reduced_cohomology(K)[2] == 1
    assert reduced_cohomology(induced(K, range(1, 8)))[2] == 2
    assert reduced_cohomology(SimplicialComplex.simplex(4)) == [0, 0, 0, 0, 0]


def test_field_dependence():
    assert reduced_cohomology(RP2, ExactField(0)) == [0, 0, 0, 0]
    assert reduced_cohomology(RP2, ExactField(2)) == [0, 0, 1, 1]
    assert reduced_cohomology(RP2, ExactField(3)) == [0, 0, 0, 0]
    assert is_cohen_macaulay(RP2, ExactField(0))
    assert not is_cohen_macaulay(RP2, ExactField(2))


def test_cohen_macaulay_examples():
    assert is_cohen_macaulay(SimplicialComplex.simplex(3))
    assert not is_cohen_macaulay(K)
    assert is_cohen_macaulay(skeleton(K, 1))
    for n in (1, 2, 3):
        assert poset_is_cohen_macaulay(injective_words(n).poset)
        assert poset_is_cohen_macaulay(cross_polytope_boundary(n).poset)
    assert poset_is_cohen_macaulay(injective_words(4).poset, ExactField(2))
    for d in (2, 3, 4):
        for delta in range(1, d):
            assert not poset_is_cohen_macaulay(delta_family(d, delta).poset)
    with pytest.raises(ValueError):
        is_cohen_macaulay(SimplicialComplex.void(2))


@settings(max_examples=80, deadline=None)
@given(complexes(allow_void=False), st.sampled_from([0, 2, 3]))
def test_euler_poincare(K, p):
    dims = reduced_cohomology(K, ExactField(p))
    assert euler_from_cohomology(dims) == reduced_euler_characteristic(K)


@settings(max_examples=60, deadline=None)
@given(complexes(), st.sampled_from([0, 2]))
def test_cohomology_matches_homology(K, p):
    assert reduced_cohomology(K, ExactField(p)) == reduced_homology(K, ExactField(p))


@settings(max_examples=40, deadline=None)
@given(complexes(max_vertices=5), st.randoms(use_true_random=False))
def test_cohomology_is_independent_of_vertex_order(K, rnd):
    perm = list(range(1, K.n + 1))
    rnd.shuffle(perm)
    relabeled = SimplicialComplex.from_faces(K.n, [tuple(sorted(perm[v - 1] for v in f)) for f in K.facets])
    assert reduced_cohomology(relabeled) == reduced_cohomology(K)
