import pytest
from hypothesis import given, settings, strategies as st

from conftest import colored_complexes, complexes
from hochster.catalog import RUNNING_EXAMPLE_COLORS, RUNNING_EXAMPLE_FACETS, delta_family
from hochster.cohomology import is_cohen_macaulay, reduced_cohomology
from hochster.complex import (
    Coloring,
    ColoringError,
    SimplicialComplex,
    check_coloring,
    faces_of_dim,
    is_balanced,
    link,
    reduced_euler_characteristic,
    restrict_colors,
    skeleton,
)
from hochster.flagvec import color_subsets

K = SimplicialComplex.from_faces(8, RUNNING_EXAMPLE_FACETS)
KAPPA = Coloring(3, RUNNING_EXAMPLE_COLORS)


def test_void_and_empty_are_distinct():
    void, empty = SimplicialComplex.void(3), SimplicialComplex.empty(3)
    assert void != empty
    assert void.is_void and not empty.is_void
    assert void.dim == -2 and empty.dim == -1
    assert faces_of_dim(void, -1) == []
    assert faces_of_dim(empty, -1) == [()]


def test_faces_of_dim():
    tri = SimplicialComplex.simplex(3)
    assert faces_of_dim(tri, 1) == [(1, 2), (1, 3), (2, 3)]
    assert faces_of_dim(K, 2) == [(1, 5, 8), (1, 6, 8), (2, 4, 8), (2, 6, 8), (3, 4, 8), (3, 5, 8)]
    assert faces_of_dim(K, 5) == []
    with pytest.raises(ValueError):
        faces_of_dim(K, -2)


def test_facets_must_form_antichain():
    with pytest.raises(ValueError):
        SimplicialComplex(3, ((1,), (1, 2)))
    with pytest.raises(ValueError):
        SimplicialComplex(2, ((1, 3),))
    assert SimplicialComplex.from_faces(3, [(1,), (1, 2)]).facets == ((1, 2),)


def test_membership_and_f_vector():
    assert (1, 8) in K and (5, 8) in K and (1, 2) not in K
    assert K.f_vector() == [1, 8, 14, 6]


def test_restrict_colors_examples():
    assert restrict_colors(K, KAPPA, {1, 2, 3}) == K
    assert restrict_colors(K, KAPPA, set()) == SimplicialComplex.empty(8)
    graph = restrict_colors(K, KAPPA, {2, 3})
    assert reduced_cohomology(graph)[1:] == [1, 0]
    # a connected graph with two independent cycles
    KS = restrict_colors(K, KAPPA, {1, 2})
    assert reduced_cohomology(KS) == [0, 0, 2]
    assert reduced_euler_characteristic(KS) == -2


def test_improper_coloring_rejected():
    with pytest.raises(ColoringError):
        restrict_colors(K, Coloring(3, (1,) * 8), {1})
    with pytest.raises(ColoringError):
        check_coloring(K, Coloring(3, (1, 2, 3)))


def test_link_examples():
    assert link(K, ()) == K
    boundary = SimplicialComplex.from_faces(3, [(1, 2), (1, 3), (2, 3)])
    assert link(boundary, (1,)).facets == ((2,), (3,))
    hexagon = link(K, (8,))
    assert sorted(hexagon.facets) == sorted([(1, 5), (3, 5), (3, 4), (2, 4), (2, 6), (1, 6)])
    with pytest.raises(ValueError):
        link(K, (1, 2))


def test_skeleton_examples():
    assert skeleton(K, K.dim) == K
    assert skeleton(SimplicialComplex.simplex(3), 0).facets == ((1,), (2,), (3,))
    D31 = delta_family(3, 1).complex
    assert is_cohen_macaulay(skeleton(D31, 0))
    assert not is_cohen_macaulay(skeleton(D31, 1))


def test_euler_characteristic_examples():
    assert reduced_euler_characteristic(SimplicialComplex.empty(2)) == -1
    square = SimplicialComplex.from_faces(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    # counts the empty face, so a circle gives -1 (its unreduced value is 0)
    assert reduced_euler_characteristic(square) == -1
    assert reduced_cohomology(square) == [0, 0, 1]


def test_balanced():
    assert is_balanced(K, KAPPA)
    assert not is_balanced(K, Coloring(4, (1, 1, 1, 2, 2, 2, 2, 4)))


@settings(max_examples=80, deadline=None)
@given(colored_complexes())
def test_restriction_is_monotone(pair):
    Kx, kappa = pair
    subsets = color_subsets(kappa.d)
    for S in subsets:
        for T in subsets:
            if S <= T:
                assert restrict_colors(Kx, kappa, S).faces <= restrict_colors(Kx, kappa, T).faces


@settings(max_examples=80, deadline=None)
@given(complexes(), st.integers(-1, 4), st.integers(-1, 4))
def test_skeleton_composition(Kx, i, j):
    assert skeleton(skeleton(Kx, i), j) == skeleton(Kx, min(i, j))


@settings(max_examples=60, deadline=None)
@given(colored_complexes())
def test_restrict_and_link_commute(pair):
    Kx, kappa = pair
    for S in color_subsets(kappa.d):
        KS = restrict_colors(Kx, kappa, S)
        for F in KS.faces:
            assert link(KS, F).faces == restrict_colors(link(Kx, F), kappa, S).faces
