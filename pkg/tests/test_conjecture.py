import random

import pytest

from hochster.catalog import cross_polytope_boundary, injective_words, running_example, simplex
from hochster.conjecture import (
    EQUAL,
    INCONCLUSIVE,
    UNEQUAL,
    InequalityViolation,
    Instance,
    batch,
    check_conjecture,
    decide,
    murai_dims_ok,
    one_dimensional_instances,
    random_complex,
    random_instances,
    random_poset,
    random_proper_coloring,
)
from hochster.complex import is_proper
from hochster.koszul import BettiTable, theta_tor
from hochster.poset import validate

E = running_example()


def test_running_example_is_equal():
    r = check_conjecture(E.poset, instance="running_example")
    assert r.verdict == EQUAL
    assert r.table_theta.entries == r.table_gamma_specialized.entries
    assert r.table_theta.entries == {(0, 0): 1, (0, 1): 2, (0, 2): 3, (0, 3): 2, (1, 5): 1, (1, 6): 1}
    assert r.inequality_ok and r.euler_theta and r.euler_gamma and r.murai_dims_ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_cohen_macaulay_instances_are_equal(n):
    for e in (simplex(n), cross_polytope_boundary(n), injective_words(n)):
        assert check_conjecture(e.poset).verdict == EQUAL, e.name


def test_one_dimensional_instances_are_equal():
    res = batch(one_dimensional_instances(5, 15))
    assert res["summary"]["equal"] == 15


def test_empty_batch():
    res = batch([])
    assert res["summary"] == {"total": 0, EQUAL: 0, UNEQUAL: 0, INCONCLUSIVE: 0, "errors": 0}
    assert res["reports"] == [] and res["discrepancies"] == []


def test_corrupted_theta_table_is_flagged():
    good = theta_tor(E.poset)
    # drop a Tor_1 class: still below gamma, but the Euler check now fails
    worse = BettiTable({k: v for k, v in good.entries.items() if k != (1, 6)}, 3, "theta", bound=good.bound)
    r = check_conjecture(E.poset, theta=worse)
    assert r.verdict == INCONCLUSIVE and r.cells == {(1, 6): (0, 1)}
    # cancelling pair that keeps the Euler check: a genuine-looking candidate
    pair = BettiTable({k: v for k, v in good.entries.items() if k not in ((1, 5), (0, 5))}, 3, "theta", bound=9)
    gamma_like = BettiTable({**good.entries, (0, 5): 1, (1, 5): 2}, 3, "theta", bound=9)
    assert decide(pair, gamma_like, 9, True, True)[0] == UNEQUAL


def test_inequality_violation_raises():
    good = theta_tor(E.poset)
    bigger = BettiTable({**good.entries, (2, 7): 1}, 3, "theta", bound=good.bound)
    with pytest.raises(InequalityViolation):
        check_conjecture(E.poset, theta=bigger)


def test_batch_records_errors_and_continues():
    from hochster.poset import SimplicialPoset, BOTTOM

    bad = SimplicialPoset({BOTTOM: 0, "a": 1, "t": 2}, frozenset({(BOTTOM, "a"), ("a", "t")}))
    res = batch([Instance("bad", bad), Instance("ok", simplex(2).poset)])
    assert res["summary"]["errors"] == 1 and res["summary"]["equal"] == 1


def test_random_generators_are_reproducible():
    a = [i.poset for i in random_instances(9, 6)]
    b = [i.poset for i in random_instances(9, 6)]
    assert a == b
    assert all(validate(P) == [] for P in a)
    rng = random.Random(4)
    for _ in range(30):
        K = random_complex(rng)
        assert is_proper(K, random_proper_coloring(rng, K))
        assert validate(random_poset(rng)) == []


def test_random_instances_are_equal():
    res = batch(random_instances(21, 16), fields=(0, 2))
    assert res["summary"]["equal"] == 32, res["errors"]


def test_murai_dimension_check():
    assert murai_dims_ok(E.poset, 9)
    assert murai_dims_ok(injective_words(3).poset, 8)
