import pytest

from hochster.catalog import cross_polytope_boundary, delta_family, injective_words, running_example, simplex
from hochster.complex import Coloring
from hochster.conjecture import random_instances
from hochster.depth import (
    INHERITED,
    REGULAR,
    WITNESSED,
    depth_ab,
    depth_duval,
    depth_regseq,
    depth_report,
    zero_divisor_witness,
)
from hochster.koszul import BettiTable, gamma_tor_hochster, theta_tor
from hochster.linalg import ExactField
from hochster.poset import BOTTOM, SimplicialPoset

E = running_example()


def test_duval_examples():
    assert depth_duval(E.poset) == 2
    for d in (1, 2, 3, 4):
        for delta in range(1, d + 1):
            assert depth_duval(delta_family(d, delta).poset) == delta
    for n in (1, 2, 3):
        assert depth_duval(injective_words(n).poset) == n


def test_duval_rejects_degenerate_input():
    with pytest.raises(ValueError):
        depth_duval(SimplicialPoset({BOTTOM: 0}, frozenset()))


def test_regseq_running_example():
    depth, statuses = depth_regseq(E.poset)
    assert depth == 2
    assert [s.status for s in statuses] == [REGULAR, REGULAR, WITNESSED]
    assert statuses[2].degree == 5 and statuses[2].h1 == 1


def test_regseq_cm_instances():
    for e in (simplex(3), cross_polytope_boundary(3), injective_words(3)):
        depth, statuses = depth_regseq(e.poset)
        assert depth == e.poset.d
        assert all(s.status == REGULAR for s in statuses)


def test_regseq_statuses_are_monotone():
    depth, statuses = depth_regseq(delta_family(4, 1).poset)
    assert depth == 1
    assert [s.status for s in statuses] == [REGULAR, WITNESSED, INHERITED, INHERITED]


def test_delta_family_zero_divisor():
    for d in (2, 3, 4):
        for delta in range(1, d):
            P = delta_family(d, delta).poset
            for j in range(1, d + 1):
                assert zero_divisor_witness(P, j, "1") == (j > delta)


def test_auslander_buchsbaum_examples():
    trivial = gamma_tor_hochster(E.complex, Coloring.trivial(8))
    assert depth_ab(trivial) == 2
    assert depth_ab(theta_tor(E.poset)) == 2
    assert depth_ab(theta_tor(simplex(3).poset)) == 3
    with pytest.raises(ValueError):
        depth_ab(BettiTable({}, 3, "theta"))


def test_report_over_several_fields():
    for p in (0, 2, 3, 32003):
        r = depth_report(delta_family(3, 2).poset, ExactField(p))
        assert r.agreement and r.duval_depth == 2
        assert r.witnesses == [{"prefix": 3, "degree": 4, "h1": 1}]
        assert r.field == str(ExactField(p))


def test_report_json_and_summary():
    r = depth_report(E.poset)
    data = r.to_json()
    assert data["duval_depth"] == 2 and data["statuses"][2]["status"] == WITNESSED
    assert "agreement" in r.summary()


def test_random_agreement():
    for inst in random_instances(3, 12):
        assert depth_report(inst.poset).agreement, inst.name
