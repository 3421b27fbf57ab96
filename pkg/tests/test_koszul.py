import pytest
from hypothesis import given, settings, strategies as st

from conftest import colored_complexes
from hochster.catalog import full_catalog, injective_words, running_example, simplex
from hochster.complex import Coloring, SimplicialComplex
from hochster.facering import face_ring
from hochster.flagvec import GradedSeriesNumerator, color_subsets, hilbert_numerator_face_ring, hilbert_numerator_sr
from hochster.koszul import (
    BettiTable,
    euler_consistency,
    gamma_tor_hochster,
    gamma_tor_strand,
    non_squarefree_degrees,
    specialize_multigraded,
    theta_tor,
)
from hochster.linalg import ExactField, SparseMatrix, rank

E = running_example()


def test_running_example_trivial_coloring():
    t = specialize_multigraded(gamma_tor_hochster(E.complex, Coloring.trivial(8)), [1] * 8)
    assert t.totals()[:7] == [1, 14, 36, 39, 22, 7, 1]
    assert [t.get(m, m + 1) for m in range(7)] == [0, 14, 34, 32, 11, 1, 0]
    assert [t.get(m, m + 2) for m in range(7)] == [0, 0, 2, 7, 11, 6, 1]


def test_running_example_three_coloring():
    t = gamma_tor_hochster(E.complex, E.coloring)
    assert t.entries == {
        (0, (0, 0, 0)): 1, (0, (1, 0, 0)): 2, (0, (0, 1, 0)): 3, (0, (1, 1, 0)): 2,
        (1, (0, 1, 1)): 1, (1, (1, 1, 1)): 1,
    }
    flat = specialize_multigraded(t)
    assert flat.entries == {(0, 0): 1, (0, 1): 2, (0, 2): 3, (0, 3): 2, (1, 5): 1, (1, 6): 1}


def test_strand_examples():
    assert gamma_tor_strand(E.complex, E.coloring, (0, 1, 1)) == [0, 1, 0, 0]
    assert gamma_tor_strand(E.complex, E.coloring, (0, 0, 0)) == [1, 0, 0, 0]
    assert gamma_tor_strand(E.complex, E.coloring, (2, 1, 0)) == [0, 0, 0, 0]
    with pytest.raises(ValueError):
        gamma_tor_strand(E.complex, E.coloring, (1, 1))


def test_point_is_free():
    pt = SimplicialComplex.from_faces(1, [(1,)])
    assert gamma_tor_hochster(pt, Coloring(1, (1,))).entries == {(0, (0,)): 1}


def test_specialization_examples():
    empty = BettiTable({}, 3, "gamma", multigraded=True)
    assert specialize_multigraded(empty).entries == {}
    one = BettiTable({(0, (1, 0, 1)): 1}, 3, "gamma", multigraded=True)
    assert specialize_multigraded(one).entries == {(0, 4): 1}
    with pytest.raises(ValueError):
        specialize_multigraded(specialize_multigraded(one))


def test_running_example_theta_table():
    for p in (0, 32003):
        t = theta_tor(E.poset, ExactField(p))
        assert t.bound == 9
        assert t.entries == {(0, 0): 1, (0, 1): 2, (0, 2): 3, (0, 3): 2, (1, 5): 1, (1, 6): 1}
        assert t.certification == "consistent-not-certified"
        assert t.excess == {}


def test_theta_cm_examples():
    t = theta_tor(injective_words(2).poset)
    assert t.entries == {(0, 0): 1, (0, 1): 1, (0, 2): 1, (0, 3): 1}
    s = theta_tor(simplex(3).poset)
    num = hilbert_numerator_face_ring(simplex(3).poset)
    assert {D: v for (m, D), v in s.entries.items()} == num.coeffs
    assert all(m == 0 for m, _ in s.entries)


def test_theta_bound_validation():
    with pytest.raises(ValueError):
        theta_tor(E.poset, max_degree=-1)
    short = theta_tor(E.poset, max_degree=4)
    assert short.certification == "within-bound"


def test_euler_consistency_examples():
    num = hilbert_numerator_face_ring(E.poset)
    t = theta_tor(E.poset)
    assert euler_consistency(t, num)
    bad = BettiTable({**t.entries, (1, 5): 2}, 3, "theta", bound=9)
    assert not euler_consistency(bad, num)
    multi = gamma_tor_hochster(E.complex, E.coloring)
    assert euler_consistency(multi, hilbert_numerator_sr(E.complex, E.coloring))
    with pytest.raises(ValueError):
        euler_consistency(multi, num)


def test_degree_zero_koszul_strand_is_quotient():
    # Tor_0 in degree D is dim of k[Δ]_D modulo the image of the theta's
    for e in full_catalog()[:10]:
        R = face_ring(e.poset)
        t = theta_tor(e.poset, max_degree=6)
        for D in range(7):
            basis = R.standard_monomials_of_degree(D)
            pos = {m: k for k, m in enumerate(basis)}
            rows = []
            for j in range(1, e.poset.d + 1):
                if j <= D:
                    for m in R.standard_monomials_of_degree(D - j):
                        row = {pos[k]: c for k, c in R.theta_times(j, m).items()}
                        if row:
                            rows.append(row)
            quotient = len(basis) - rank(SparseMatrix(len(rows), len(basis), rows))
            assert t.get(0, D) == quotient, (e.name, D)


def test_json_round_trip():
    t = theta_tor(E.poset)
    assert BettiTable.from_json(t.to_json()) == t
    g = gamma_tor_hochster(E.complex, E.coloring)
    assert BettiTable.from_json(g.to_json()) == g


def test_non_squarefree_sample():
    degs = non_squarefree_degrees(2)
    assert (2, 0) in degs and (2, 2) in degs and (1, 1) not in degs
    assert all(max(b) == 2 and sum(b) <= 4 for b in degs)


@settings(max_examples=25, deadline=None)
@given(colored_complexes(max_vertices=6, max_facet=3), st.sampled_from([0, 2]))
def test_strands_agree_with_subcomplex_cohomology(pair, p):
    K, kappa = pair
    field = ExactField(p)
    table = gamma_tor_hochster(K, kappa, field)
    for S in color_subsets(kappa.d):
        b = tuple(1 if j in S else 0 for j in range(1, kappa.d + 1))
        assert gamma_tor_strand(K, kappa, b, field) == [table.get(m, b) for m in range(kappa.d + 1)]
    for b in non_squarefree_degrees(kappa.d)[:20]:
        assert not any(gamma_tor_strand(K, kappa, b, field))
